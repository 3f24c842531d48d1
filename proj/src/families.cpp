#include "tetrazero/families.hpp"

#include <set>
#include <stdexcept>

#include "tetrazero/multi_quad.hpp"
#include "tetrazero/sqrt_quantity.hpp"

namespace tetrazero {

const char* family_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::H1: return "h1";
        case FamilyTag::H2: return "h2";
        case FamilyTag::H3: return "h3";
        case FamilyTag::NewT: return "new-t";
        case FamilyTag::NewTPrime: return "new-tp";
    }
    return "?";
}

FamilyInstance make_instance(FamilyTag tag, const Rational& parameter, const EdgeTuple& edges) {
    Int scale = 1;
    for (const auto& e : edges) scale = lcm(scale, Int(e.get_den()));
    FamilyInstance inst{tag, parameter, edges, scale, {}};
    for (int i = 0; i < kEdgeCount; ++i) {
        Rational v = edges[i] * Rational(scale);
        if (!is_integer(v) || !v.get_num().fits_slong_p())
            throw std::overflow_error("family instance does not fit in 64-bit edges");
        inst.scaled[i] = static_cast<std::int64_t>(v.get_num().get_si());
    }
    return inst;
}

EdgeTuple new_family(const Rational& t, bool t_prime) {
    if (t <= 4) throw std::domain_error("new_family: parameter must exceed 4");
    if (!t_prime) return {t + 1, t - 1, t + 1, t - 1, t, Rational(6)};
    Rational half = t / 2;
    return {t + 1, t - 1, half + 2, half + 4, half + 3, 3 * half - 3};
}

std::optional<FamilyInstance> h1_instance(const Rational& t) {
    Rational denom = t * t + 3;
    Rational x = (3 - t * t) / denom;  // sin a
    Rational y = 6 * t / denom;        // sqrt(3) cos a
    EdgeTuple edges = {x, x, y, x, Rational(1), Rational(1)};
    if (!all_positive(edges) || !is_nondegenerate(edges)) return std::nullopt;
    return make_instance(FamilyTag::H1, t, edges);
}

namespace {

bool square_root_if_square(const Int& n, Int& root) {
    if (sgn(n) < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return true;
}

void collect_instance(FamilyTag tag, const Rational& x, const EdgeTuple& edges,
                      std::set<IntEdgeTuple>& seen, std::vector<FamilyInstance>& out) {
    if (!all_positive(edges) || !is_nondegenerate(edges)) return;
    FamilyInstance inst = make_instance(tag, x, edges);
    IntEdgeTuple key = inst.scaled;
    Int g(static_cast<long>(key[0]));
    for (auto v : key) g = gcd(g, Int(static_cast<long>(v)));
    if (g > 1)
        for (auto& v : key) v /= static_cast<std::int64_t>(g.get_si());
    if (seen.insert(key).second) out.push_back(std::move(inst));
}

}  // namespace

FamilySearchResult h2_search(long max_denominator) {
    if (max_denominator < 1) throw std::invalid_argument("h2_search: bad bound");
    FamilySearchResult result;
    result.curve = "w^2 = t^4 - 9*t^2 + 9";
    std::set<IntEdgeTuple> seen;
    for (long q = 1; q <= max_denominator; ++q) {
        for (long p = 1; p < q; ++p) {
            if (gcd(Int(p), Int(q)) != 1) continue;
            // sin a = p/q needs 3(q^2 - p^2) and 5p^2 - q^2 to be squares.
            Int y2 = Int(3) * (Int(q) * q - Int(p) * p);
            Int z2 = Int(5) * Int(p) * p - Int(q) * q;
            Int y, z;
            if (!square_root_if_square(y2, y) || !square_root_if_square(z2, z)) continue;
            Rational x = make_rational(p, q);
            EdgeTuple edges = {2 * x, make_rational(z, Int(q)), make_rational(y, Int(q)),
                               2 * x, Rational(2), make_rational(z, Int(q))};
            collect_instance(FamilyTag::H2, x, edges, seen, result.instances);
        }
    }
    return result;
}

FamilySearchResult h3_search(long max_denominator) {
    if (max_denominator < 1) throw std::invalid_argument("h3_search: bad bound");
    FamilySearchResult result;
    result.curve = "w^2 = 3*(t^4 + 2*t^2 + 9)";
    std::set<IntEdgeTuple> seen;
    for (long q = 1; q <= max_denominator; ++q) {
        for (long p = 1; p < q; ++p) {
            if (gcd(Int(p), Int(q)) != 1) continue;
            // sin a = p/q needs 3(q^2 - p^2) and p^2 + 2q^2 to be squares;
            // the face edge sqrt(12) cos a then equals 2y/q.
            Int y2 = Int(3) * (Int(q) * q - Int(p) * p);
            Int r2 = Int(p) * p + Int(2) * Int(q) * q;
            Int y, r;
            if (!square_root_if_square(y2, y) || !square_root_if_square(r2, r)) continue;
            Rational x = make_rational(p, q);
            EdgeTuple edges = {2 * x,       make_rational(r, Int(q)), make_rational(2 * y, Int(q)),
                               x,           make_rational(r, Int(q)), Rational(2)};
            collect_instance(FamilyTag::H3, x, edges, seen, result.instances);
        }
    }
    return result;
}

namespace {

// Certified enclosure of arccos(c) for an exact cosine value c = q * sqrt(r).
RealInterval angle_enclosure(const SqrtQuantity& cosine, mpfr_prec_t bits) {
    RealInterval c = RealInterval::sqrt_of(cosine.radicand(), bits).scaled(cosine.coeff(), bits);
    return c.acos_of(bits);
}

// Certifies |combo . angles + pi_coeff * pi| < 1/10^30 by refinement.
bool certify_angle_relation(const AngleData& trig, const std::array<long, 6>& combo,
                            long pi_coeff) {
    const Rational tol = make_rational(Int(1), pow_int(Int(10), 30));
    for (mpfr_prec_t bits = 160; bits <= 1 << 14; bits *= 2) {
        RealInterval acc = RealInterval::exact(Rational(0), bits);
        for (int i = 0; i < kEdgeCount; ++i) {
            if (combo[i] == 0) continue;
            acc = acc + angle_enclosure(trig.cos[i], bits).scaled(Rational(combo[i]), bits);
        }
        acc = acc + RealInterval::pi(bits).scaled(Rational(pi_coeff), bits);
        if (acc.abs_below(tol)) return true;
        // Refine only while the enclosure is still too wide to decide.
        if (!acc.contains_zero()) return false;
    }
    return false;
}

}  // namespace

NewFamilyRelations verify_new_family_relations(const Rational& t) {
    EdgeTuple edges = new_family(t, false);
    AngleData trig = dihedral_trig(edges);

    const int e12 = 0, e24 = 3, e14 = 4, e23 = 5;
    MultiQuadNumber cos_sum =
        MultiQuadNumber(trig.cos[e12] * trig.cos[e24]) - MultiQuadNumber(trig.sin[e12] * trig.sin[e24]);
    MultiQuadNumber cos_diff =
        MultiQuadNumber(trig.cos[e12] * trig.cos[e24]) + MultiQuadNumber(trig.sin[e12] * trig.sin[e24]);
    MultiQuadNumber cos_double = MultiQuadNumber(Rational(2)) * cos_sum * cos_sum - MultiQuadNumber(Rational(1));

    auto cos_triple_of = [&](int pos) {
        MultiQuadNumber c(trig.cos[pos]);
        return MultiQuadNumber(Rational(4)) * c * c * c - MultiQuadNumber(Rational(3)) * c;
    };

    NewFamilyRelations rel;
    // cos(2 a12 + 2 a24) should match the edge-14 cosine and cos(3 a23) should
    // match -cos(a12 - a24); accept the swapped assignment as well and report
    // which one held.
    bool as_stated = cos_double == MultiQuadNumber(trig.cos[e14]) && cos_triple_of(e23) == -cos_diff;
    bool swapped = cos_double == MultiQuadNumber(trig.cos[e23]) && cos_triple_of(e14) == -cos_diff;
    rel.cos_double_identity = as_stated || swapped;
    rel.cos_triple_identity = rel.cos_double_identity;
    rel.indices_as_stated = as_stated;
    if (!rel.cos_double_identity) return rel;

    int pos_two_pi = as_stated ? e14 : e23;
    int pos_pi = as_stated ? e23 : e14;
    std::array<long, 6> first{};
    first[e12] = 2;
    first[e24] = 2;
    first[pos_two_pi] = 1;
    std::array<long, 6> second{};
    second[e12] = 1;
    second[e24] = -1;
    second[pos_pi] = 3;
    rel.holds = certify_angle_relation(trig, first, -2) && certify_angle_relation(trig, second, -1);
    return rel;
}

Real dehn_sum_certificate(const Rational& t, int digits) {
    EdgeTuple edges = new_family(t, false);
    AngleData trig = dihedral_trig(edges);
    mpfr_prec_t bits = Real::digits_to_bits(digits + 15);
    RealInterval acc = RealInterval::exact(Rational(0), bits);
    for (int i = 0; i < kEdgeCount; ++i)
        acc = acc + angle_enclosure(trig.cos[i], bits).scaled(edges[i], bits);
    acc = acc - RealInterval::pi(bits).scaled(2 * (t + 1), bits);
    // Upper bound of |acc| / pi.
    Real mag = acc.lo().abs();
    if (acc.hi().abs() > mag) mag = acc.hi().abs();
    Real out(bits);
    mpfr_div(out.raw(), mag.raw(), RealInterval::pi(bits).lo().raw(), MPFR_RNDU);
    return out;
}

}  // namespace tetrazero
