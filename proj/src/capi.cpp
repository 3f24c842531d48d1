#include "tetrazero.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "tetrazero/bounds.hpp"
#include "tetrazero/families.hpp"
#include "tetrazero/padic.hpp"
#include "tetrazero/report.hpp"
#include "tetrazero/symmetry.hpp"

using namespace tetrazero;

struct tz_report {
    TetraReport body;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

tz_status record_error(tz_status code, const char* what) {
    g_last_error = what ? what : "";
    return code;
}

template <typename Fn>
tz_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return TZ_OK;
    } catch (const VerificationError& e) {
        return record_error(TZ_EVERIFY, e.what());
    } catch (const std::domain_error& e) {
        return record_error(TZ_EDEGENERATE, e.what());
    } catch (const std::invalid_argument& e) {
        return record_error(TZ_EINVAL, e.what());
    } catch (const std::exception& e) {
        return record_error(TZ_EINTERNAL, e.what());
    } catch (...) {
        return record_error(TZ_EINTERNAL, "unknown error");
    }
}

IntEdgeTuple tuple_from(const int64_t edges[6]) {
    if (!edges) throw std::invalid_argument("edges must not be null");
    IntEdgeTuple t;
    for (int i = 0; i < 6; ++i) {
        if (edges[i] <= 0) throw std::invalid_argument("edge lengths must be positive integers");
        t[i] = edges[i];
    }
    return t;
}

nlohmann::ordered_json instance_json(const FamilyInstance& inst) {
    nlohmann::ordered_json j;
    j["family"] = family_name(inst.tag);
    j["parameter"] = to_string(inst.parameter);
    nlohmann::ordered_json exact = nlohmann::ordered_json::array();
    for (const auto& e : inst.edges) exact.push_back(to_string(e));
    j["edges_exact"] = exact;
    j["scale"] = inst.scale.get_str();
    j["edges"] = inst.scaled;
    j["report"] = nlohmann::ordered_json::parse(report_json(check_tuple(inst.scaled)));
    return j;
}

}  // namespace

extern "C" {

const char* tz_last_error(void) { return g_last_error.c_str(); }

const char* tz_version(void) { return "tetrazero 1.0.0"; }

void tz_string_free(char* s) { std::free(s); }

tz_status tz_check(const int64_t edges[6], const tz_check_options* opts, tz_report** out) {
    if (!out) return record_error(TZ_EINVAL, "out must not be null");
    *out = nullptr;
    return guarded([&] {
        CheckOptions o;
        if (opts) o.cross_check = opts->cross_check != 0;
        *out = new tz_report{check_tuple(tuple_from(edges), o)};
    });
}

void tz_report_free(tz_report* r) { delete r; }

int tz_report_valid(const tz_report* r) { return r && r->body.valid ? 1 : 0; }

int tz_report_dehn_zero(const tz_report* r) { return r && r->body.dehn_zero ? 1 : 0; }

int tz_report_dimension(const tz_report* r) {
    return r && r->body.dimension ? *r->body.dimension : -1;
}

int tz_report_matched_root(const tz_report* r, int* order, int* power) {
    if (!r || !r->body.matched_root) return 0;
    if (order) *order = r->body.matched_root->order;
    if (power) *power = r->body.matched_root->power;
    return 1;
}

int tz_report_canonical_form(const tz_report* r, int64_t out[6]) {
    if (!r || !out || !r->body.canonical_form) return 0;
    for (int i = 0; i < 6; ++i) out[i] = (*r->body.canonical_form)[i];
    return 1;
}

int tz_report_opposite_sums(const tz_report* r, int64_t out[3]) {
    if (!r || !out || !r->body.opposite_sums) return 0;
    for (int i = 0; i < 3; ++i) out[i] = (*r->body.opposite_sums)[i];
    return 1;
}

int tz_report_regge_orbit_size(const tz_report* r) {
    return r && r->body.regge_orbit_size ? *r->body.regge_orbit_size : -1;
}

char* tz_report_json(const tz_report* r) {
    return r ? dup_string(report_json(r->body)) : nullptr;
}

char* tz_report_csv_row(const tz_report* r) {
    return r ? dup_string(report_csv_row(r->body)) : nullptr;
}

char* tz_csv_header(void) { return dup_string(report_csv_header()); }

tz_status tz_scan(const tz_scan_options* opts, tz_report_callback cb, void* user) {
    if (!opts || !cb) return record_error(TZ_EINVAL, "options and callback must not be null");
    return guarded([&] {
        ScanOptions o;
        o.max_edge = opts->max_edge;
        o.workers = opts->workers;
        switch (opts->dedupe) {
            case 0: o.dedupe = ScanOptions::Dedupe::None; break;
            case 1: o.dedupe = ScanOptions::Dedupe::S4; break;
            case 2: o.dedupe = ScanOptions::Dedupe::S4Regge; break;
            default: throw std::invalid_argument("dedupe must be 0, 1 or 2");
        }
        o.emit_all = opts->emit_all != 0;
        o.cross_check = opts->cross_check != 0;
        struct Abort {};
        try {
            scan(o, [&](const TetraReport& rep) {
                tz_report boxed{rep};
                if (cb(&boxed, user) != 0) throw Abort{};
            });
        } catch (const Abort&) {
        }
    });
}

tz_status tz_dim_json(const int64_t edges[6], char** out) {
    if (!out) return record_error(TZ_EINVAL, "out must not be null");
    *out = nullptr;
    return guarded([&] {
        IntEdgeTuple t = tuple_from(edges);
        ValuationMatrix vm = valuation_matrix(t);
        nlohmann::ordered_json j;
        j["edges"] = t;
        j["dimension"] = angle_span_dimension(t);
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < vm.rows.size(); ++i) {
            nlohmann::ordered_json row;
            row["prime"] = vm.branches[i].p.get_str();
            row["root"] = vm.branches[i].root.get_str();
            row["precision"] = vm.branches[i].precision;
            row["valuations"] = vm.rows[i];
            rows.push_back(std::move(row));
        }
        j["valuation_rows"] = rows;
        *out = dup_string(j.dump());
    });
}

tz_status tz_orbit_json(const int64_t edges[6], int group, int up_to_s4, char** out) {
    if (!out) return record_error(TZ_EINVAL, "out must not be null");
    *out = nullptr;
    return guarded([&] {
        IntEdgeTuple t = tuple_from(edges);
        OrbitOptions o;
        switch (group) {
            case 0: o.group = OrbitGroup::S4; break;
            case 1: o.group = OrbitGroup::Regge; break;
            case 2: o.group = OrbitGroup::Both; break;
            default: throw std::invalid_argument("group must be 0, 1 or 2");
        }
        o.up_to_s4 = up_to_s4 != 0;
        auto members = orbit(to_rational(t), o);
        nlohmann::ordered_json j;
        j["edges"] = t;
        j["group"] = group == 0 ? "s4" : group == 1 ? "regge" : "both";
        j["up_to_s4"] = o.up_to_s4;
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const EdgeTuple& member : members) {
            nlohmann::ordered_json tuple = nlohmann::ordered_json::array();
            for (const auto& v : member) tuple.push_back(to_string(v));
            arr.push_back(std::move(tuple));
        }
        j["orbit"] = arr;
        j["size"] = members.size();
        *out = dup_string(j.dump());
    });
}

tz_status tz_family_json(const char* family, const char* parameter, int64_t max_denominator,
                         char** out) {
    if (!out) return record_error(TZ_EINVAL, "out must not be null");
    *out = nullptr;
    return guarded([&] {
        if (!family) throw std::invalid_argument("family must not be null");
        std::string name(family);
        nlohmann::ordered_json j;
        auto parse_param = [&]() {
            if (!parameter) throw std::invalid_argument("this family needs --t");
            auto q = parse_rational(parameter);
            if (!q) throw std::invalid_argument("parameter must be an integer or p/q");
            return *q;
        };
        if (name == "new-t" || name == "new-tp") {
            Rational t = parse_param();
            EdgeTuple edges = new_family(t, name == "new-tp");
            FamilyInstance inst =
                make_instance(name == "new-tp" ? FamilyTag::NewTPrime : FamilyTag::NewT, t, edges);
            j = instance_json(inst);
        } else if (name == "h1") {
            Rational t = parse_param();
            auto inst = h1_instance(t);
            if (!inst) {
                j["family"] = "h1";
                j["parameter"] = to_string(t);
                j["degenerate"] = true;
            } else {
                j = instance_json(*inst);
            }
        } else if (name == "h2" || name == "h3") {
            if (max_denominator < 1)
                throw std::invalid_argument("this family needs --max-denominator");
            FamilySearchResult res =
                name == "h2" ? h2_search(max_denominator) : h3_search(max_denominator);
            j["family"] = name;
            j["curve"] = res.curve;
            j["max_denominator"] = max_denominator;
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& inst : res.instances) arr.push_back(instance_json(inst));
            j["instances"] = arr;
        } else {
            throw std::invalid_argument("family must be h1, h2, h3, new-t or new-tp");
        }
        *out = dup_string(j.dump());
    });
}

tz_status tz_bound_case5_json(int precision_digits, char** out) {
    if (!out) return record_error(TZ_EINVAL, "out must not be null");
    *out = nullptr;
    return guarded([&] {
        BoundReport report = case5_bound(precision_digits);
        nlohmann::ordered_json j;
        j["constant"] = report.constant.str(report.precision_digits);
        j["fixed_point"] = report.fixed_point.str(report.precision_digits);
        j["certified_integer_bound"] = report.certified_integer_bound.get_str();
        j["precision_digits"] = report.precision_digits;
        *out = dup_string(j.dump());
    });
}

}  // extern "C"
