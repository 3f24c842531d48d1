#include "tetrazero/report.hpp"

#include <json.hpp>

#include "tetrazero/padic.hpp"
#include "tetrazero/symmetry.hpp"

namespace tetrazero {

namespace {

std::array<std::int64_t, 3> opposite_sums_int(const IntEdgeTuple& e) {
    std::array<std::int64_t, 3> sums = {e[0] + e[1], e[2] + e[3], e[4] + e[5]};
    std::sort(sums.begin(), sums.end());
    return sums;
}

}  // namespace

bool numeric_dehn_zero(const IntEdgeTuple& edges, int digits, long max_denominator) {
    AngleData trig = dihedral_trig(to_rational(edges));
    mpfr_prec_t bits = Real::digits_to_bits(digits);
    Real sum(bits);
    for (int i = 0; i < kEdgeCount; ++i)
        sum = sum + Real::from(static_cast<long>(edges[i]), bits) * trig.angle(i, digits);
    Real x = sum / Real::pi(bits);

    // Exact rational image of the computed value, then continued fractions.
    mpz_t mant;
    mpz_init(mant);
    mpfr_exp_t e2 = mpfr_get_z_2exp(mant, x.raw());
    Rational value = Rational(Int(mant));
    mpz_clear(mant);
    if (e2 >= 0) {
        value *= pow_rational(Rational(2), e2);
    } else {
        value /= pow_rational(Rational(2), -e2);
    }

    // Convergents p/q of the continued fraction, denominators up to the bound.
    Int p0 = 1, q0 = 0;  // p(-1)/q(-1)
    Int p1, q1;          // p(0)/q(0)
    Rational rest = value;
    Int a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    p1 = a;
    q1 = 1;
    Rational tolerance = make_rational(Int(1), pow_int(Int(10), digits - 12));
    for (int iter = 0; iter < 64; ++iter) {
        if (q1 <= max_denominator && abs(value - make_rational(p1, q1)) < tolerance) return true;
        if (q1 > max_denominator) break;
        Rational frac = rest - Rational(a);
        if (sgn(frac) == 0) break;
        rest = Rational(1) / frac;
        mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
        Int p2 = a * p1 + p0;
        Int q2 = a * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    return false;
}

TetraReport check_tuple(const IntEdgeTuple& edges, const CheckOptions& opts) {
    TetraReport report;
    report.edges = edges;
    bool positive = true;
    for (auto e : edges) positive = positive && e > 0;
    report.valid = positive && is_nondegenerate(to_rational(edges));
    if (!report.valid) return report;

    DehnOptions dehn_opts;
    dehn_opts.filter_primes = opts.filter_primes;
    DehnVerdict verdict = dehn_invariant_is_zero(edges, dehn_opts);
    report.dehn_zero = verdict.is_zero;
    report.matched_root = verdict.matched_root;
    report.dimension = angle_span_dimension(edges);
    report.canonical_form = s4_canonical(edges);
    report.opposite_sums = opposite_sums_int(edges);
    report.regge_orbit_size = static_cast<int>(
        orbit(to_rational(edges), OrbitOptions{OrbitGroup::Both, /*up_to_s4=*/true}).size());

    if (opts.cross_check && numeric_dehn_zero(edges) != report.dehn_zero)
        throw VerificationError("numeric angle-sum oracle disagrees with the exact Dehn test");
    return report;
}

std::string report_json(const TetraReport& r) {
    nlohmann::ordered_json j;
    j["edges"] = r.edges;
    j["valid"] = r.valid;
    if (r.valid) {
        j["dehn_zero"] = r.dehn_zero;
        if (r.matched_root)
            j["matched_root"] = {r.matched_root->order, r.matched_root->power};
        else
            j["matched_root"] = nullptr;
        j["dimension"] = *r.dimension;
        j["canonical_form"] = *r.canonical_form;
        j["opposite_sums"] = *r.opposite_sums;
        j["regge_orbit_size"] = *r.regge_orbit_size;
    }
    return j.dump();
}

std::string report_csv_header() {
    return "e12,e34,e13,e24,e14,e23,valid,dehn_zero,root_order,root_power,dimension,"
           "canonical_form,opposite_sums,regge_orbit_size";
}

namespace {

template <typename Array>
std::string joined(const Array& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(a[i]);
    }
    return s;
}

}  // namespace

std::string report_csv_row(const TetraReport& r) {
    std::string s;
    for (int i = 0; i < kEdgeCount; ++i) {
        if (i) s += ',';
        s += std::to_string(r.edges[i]);
    }
    s += r.valid ? ",true" : ",false";
    if (!r.valid) {
        s += ",,,,,,,";
        return s;
    }
    s += r.dehn_zero ? ",true" : ",false";
    if (r.matched_root) {
        s += ',' + std::to_string(r.matched_root->order) + ',' + std::to_string(r.matched_root->power);
    } else {
        s += ",,";
    }
    s += ',' + std::to_string(*r.dimension);
    s += ',' + joined(*r.canonical_form);
    s += ',' + joined(*r.opposite_sums);
    s += ',' + std::to_string(*r.regge_orbit_size);
    return s;
}

}  // namespace tetrazero
