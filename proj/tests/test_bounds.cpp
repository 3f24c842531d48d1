#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "tetrazero/bounds.hpp"
#include "tetrazero/linalg.hpp"
#include "tetrazero/multi_quad.hpp"

using namespace tetrazero;

namespace {

std::vector<std::vector<Rational>> matrix_of(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Rational>> m;
    for (auto& row : rows) {
        std::vector<Rational> r;
        for (long v : row) r.emplace_back(v);
        m.push_back(std::move(r));
    }
    return m;
}

}  // namespace

TEST_CASE("fixed point of the dimension-five bound") {
    BoundReport report = case5_bound(30);

    // The crossing bracket: the right-hand side dominates at 1e6 and is
    // dominated at 1e16.
    mpfr_prec_t bits = Real::digits_to_bits(40);
    Real c = report.constant;
    auto rhs = [&](const Real& n) {
        return c * pow_ui(log(Real::from(9L, bits) * pow_ui(n, 8)), 5);
    };
    Real lo = Real::from(1000000L, bits);
    Real hi = Real::from(pow_int(10, 16), bits);
    CHECK(rhs(lo) > lo);
    CHECK(rhs(hi) < hi);

    // The certified crossing, compared against 3.946e12 within one part in a
    // thousand.
    Rational target = Rational(3946) * pow_rational(Rational(10), 9);
    Rational ratio = Rational(report.certified_integer_bound) / target;
    CHECK(ratio > make_rational(999, 1000));
    CHECK(ratio < make_rational(1001, 1000));

    // The integer bound is the exact crossing point.
    Real at = Real::from(report.certified_integer_bound, bits);
    Real next = Real::from(Int(report.certified_integer_bound + 1), bits);
    CHECK(rhs(at) >= at);
    CHECK(rhs(next) < next);

    // Doubling the precision moves the certified bound by less than 0.01%.
    BoundReport finer = case5_bound(60);
    Rational drift = abs(Rational(finer.certified_integer_bound) -
                         Rational(report.certified_integer_bound)) /
                     Rational(report.certified_integer_bound);
    CHECK(drift < make_rational(1, 10000));
}

TEST_CASE("determinant bounds on catalogued matrices") {
    auto id3 = hadamard_bound(matrix_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    // (sqrt(3))^3 = 3*sqrt(3) and the row-norm product is 1.
    CHECK(id3.entrywise == SqrtQuantity(Rational(3), 3));
    CHECK(id3.row_norm_product == 1);

    auto h2 = hadamard_bound(matrix_of({{1, 1}, {1, -1}}));
    CHECK(h2.entrywise == SqrtQuantity(Rational(2), 1));  // equality case
    CHECK(h2.row_norm_product == 4);
    CHECK(determinant(matrix_of({{1, 1}, {1, -1}})) == -2);

    auto block = hadamard_bound(matrix_of({{1, -2}, {-1, 1}}));
    CHECK(block.row_norm_product == 6);
    CHECK(abs(determinant(matrix_of({{1, -2}, {-1, 1}}))) == 1);

    auto corrected = hadamard_bound(matrix_of({{1, -2}, {-2, 1}}));
    CHECK(corrected.row_norm_product == 9);
    CHECK(abs(determinant(matrix_of({{1, -2}, {-2, 1}}))) == 3);
}

TEST_CASE("determinant never exceeds either bound, randomized") {
    for (int iter = 0; iter < 1000; ++iter) {
        std::size_t n = static_cast<std::size_t>(testing::random_int(1, 5));
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
        for (auto& row : m)
            for (auto& v : row) {
                long num = static_cast<long>(testing::random_int(-12, 12));
                long den = static_cast<long>(testing::random_int(1, 4));
                v = make_rational(num, den);
            }
        Rational det = determinant(m);
        HadamardBounds bounds = hadamard_bound(m);
        // |det| <= q*sqrt(r) iff det^2 <= q^2 r for nonnegative right side.
        CHECK(det * det <= bounds.entrywise.squared());
        CHECK(abs(det) <= bounds.row_norm_product);
    }
}

TEST_CASE("face minors respect the quartic cap") {
    CHECK(minor_bound_check(10, 1000));
    CHECK(minor_bound_check(3, 1000));  // exhaustive sweep, 729 tuples
    CHECK(minor_bound_check(50, 500));

    // Equality at the equilateral corner: minor 3 = 3 * 1^4 on a unit face.
    CHECK(cayley_menger(to_rational(IntEdgeTuple{1, 1, 1, 1, 1, 1})).face_minor[0] == 3);
}
