#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "tetrazero/padic.hpp"
#include "tetrazero/report.hpp"
#include "tetrazero/symmetry.hpp"

namespace tetrazero {

namespace {

using int128 = __int128;

int128 sq(std::int64_t v) { return static_cast<int128>(v) * v; }

// 16 * (face area)^2 from the three face edges.
int128 face_minor_i128(std::int64_t x, std::int64_t y, std::int64_t z) {
    int128 x2 = sq(x), y2 = sq(y), z2 = sq(z);
    return 2 * (x2 * y2 + y2 * z2 + z2 * x2) - x2 * x2 - y2 * y2 - z2 * z2;
}

// Bordered squared-distance determinant, expanded over 64-bit edges. Entries
// stay far below the 128-bit range for the edge sizes a scan can reach.
int128 cm_det_i128(const IntEdgeTuple& e) {
    int128 m[5][5] = {};
    static constexpr int pos_of[4][4] = {
        {-1, 0, 2, 4}, {0, -1, 5, 3}, {2, 5, -1, 1}, {4, 3, 1, -1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = (i == j) ? 0 : sq(e[pos_of[i][j]]);
    for (int i = 0; i < 4; ++i) m[i][4] = m[4][i] = 1;

    // Cofactor expansion; n = 5 keeps this trivial.
    int idx[5] = {0, 1, 2, 3, 4};
    struct Det {
        static int128 go(int128 mat[5][5], int* cols, int n, int row) {
            if (n == 1) return mat[row][cols[0]];
            int128 acc = 0;
            int sub[5];
            for (int k = 0; k < n; ++k) {
                int t = 0;
                for (int c = 0; c < n; ++c)
                    if (c != k) sub[t++] = cols[c];
                int128 term = mat[row][cols[k]] * go(mat, sub, n - 1, row + 1);
                acc += (k % 2 == 0) ? term : -term;
            }
            return acc;
        }
    };
    return Det::go(m, idx, 5, 0);
}

struct FastValidity {
    bool valid;
    std::array<int128, 4> face_minors;
};

FastValidity fast_validity(const IntEdgeTuple& e) {
    FastValidity out{false, {}};
    static constexpr int faces[4][3] = {{5, 3, 1}, {2, 4, 1}, {0, 3, 4}, {0, 2, 5}};
    for (auto& f : faces) {
        std::int64_t x = e[f[0]], y = e[f[1]], z = e[f[2]];
        if (x + y <= z || y + z <= x || z + x <= y) return out;
    }
    for (int v = 0; v < 4; ++v)
        out.face_minors[v] = face_minor_i128(e[faces[v][0]], e[faces[v][1]], e[faces[v][2]]);
    out.valid = cm_det_i128(e) > 0;
    return out;
}

// Canonical iff no relabeled image compares lexicographically smaller.
bool is_s4_canonical(const IntEdgeTuple& e) {
    for (const auto& map : s4_edge_maps()) {
        for (int pos = 0; pos < kEdgeCount; ++pos) {
            std::int64_t img = e[map[pos]];
            if (img > e[pos]) break;
            if (img < e[pos]) return false;
        }
    }
    return true;
}

// Smallest integer member of the closure under relabelings and Regge moves,
// reported as a canonical form. Intermediate members may be non-integral.
IntEdgeTuple regge_class_minimum(const IntEdgeTuple& e) {
    auto closure = orbit(to_rational(e), OrbitOptions{OrbitGroup::Both, /*up_to_s4=*/true});
    IntEdgeTuple best = s4_canonical(e);
    for (const EdgeTuple& t : closure) {
        auto integral = to_integer(t);
        if (integral && *integral < best) best = *integral;
    }
    return best;
}

struct TupleOrder {
    bool operator()(const TetraReport& a, const TetraReport& b) const {
        std::int64_t ma = *std::max_element(a.edges.begin(), a.edges.end());
        std::int64_t mb = *std::max_element(b.edges.begin(), b.edges.end());
        if (ma != mb) return ma < mb;
        IntEdgeTuple ca = a.canonical_form.value_or(a.edges);
        IntEdgeTuple cb = b.canonical_form.value_or(b.edges);
        if (ca != cb) return ca < cb;
        return a.edges < b.edges;
    }
};

}  // namespace

void scan(const ScanOptions& opts, const std::function<void(const TetraReport&)>& emit) {
    if (opts.max_edge < 1) throw std::invalid_argument("scan: max_edge must be at least 1");
    if (opts.workers < 1) throw std::invalid_argument("scan: workers must be at least 1");
    // The 128-bit fast path needs sixth powers of squared entries in range.
    if (opts.max_edge > 1000000) throw std::invalid_argument("scan: max_edge out of supported range");

    const std::int64_t n = opts.max_edge;
    const int128 minor_cap = 3 * sq(n) * sq(n);

    auto process_block = [&](std::int64_t first_edge, std::vector<TetraReport>& out) {
        IntEdgeTuple e;
        e[0] = first_edge;
        for (e[1] = 1; e[1] <= n; ++e[1])
            for (e[2] = 1; e[2] <= n; ++e[2])
                for (e[3] = 1; e[3] <= n; ++e[3])
                    for (e[4] = 1; e[4] <= n; ++e[4])
                        for (e[5] = 1; e[5] <= n; ++e[5]) {
                            if (opts.dedupe != ScanOptions::Dedupe::None && !is_s4_canonical(e))
                                continue;
                            FastValidity fv = fast_validity(e);
                            if (opts.dedupe == ScanOptions::Dedupe::S4Regge && fv.valid &&
                                regge_class_minimum(e) != e)
                                continue;
                            if (!fv.valid) {
                                if (opts.emit_all) {
                                    TetraReport r;
                                    r.edges = e;
                                    out.push_back(std::move(r));
                                }
                                continue;
                            }
                            // Every face minor a scan touches obeys the quartic cap.
                            for (const auto& fm : fv.face_minors) {
                                int128 mag = fm < 0 ? -fm : fm;
                                if (mag > minor_cap)
                                    throw VerificationError("face minor exceeded its quartic bound");
                            }

                            EdgeTuple rat = to_rational(e);
                            CayleyMengerData cm = cayley_menger(rat);
                            auto rotations = dihedral_rotations_squared(rat, cm);

                            bool rejected = false;
                            for (std::int64_t p : opts.filter_primes) {
                                if (detail::modp_filter_prepared(rotations, cm.face_minor, e, p) ==
                                    FilterOutcome::RejectedNotZero) {
                                    rejected = true;
                                    break;
                                }
                            }

                            TetraReport r;
                            r.edges = e;
                            r.valid = true;
                            if (rejected) {
                                r.dehn_zero = false;
                            } else {
                                DehnVerdict verdict = detail::exact_verdict(e, rotations);
                                r.dehn_zero = verdict.is_zero;
                                r.matched_root = verdict.matched_root;
                            }
                            if (!r.dehn_zero && !opts.emit_all) continue;

                            r.dimension = angle_span_dimension(e);
                            r.canonical_form = s4_canonical(e);
                            std::array<std::int64_t, 3> sums = {e[0] + e[1], e[2] + e[3], e[4] + e[5]};
                            std::sort(sums.begin(), sums.end());
                            r.opposite_sums = sums;
                            r.regge_orbit_size = static_cast<int>(
                                orbit(rat, OrbitOptions{OrbitGroup::Both, /*up_to_s4=*/true}).size());
                            if (opts.cross_check && numeric_dehn_zero(e) != r.dehn_zero)
                                throw VerificationError(
                                    "numeric angle-sum oracle disagrees with the exact Dehn test");
                            out.push_back(std::move(r));
                        }
    };

    std::vector<std::vector<TetraReport>> blocks(static_cast<std::size_t>(n));
    std::atomic<std::int64_t> next{1};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            std::int64_t block = next.fetch_add(1);
            if (block > n) return;
            try {
                process_block(block, blocks[static_cast<std::size_t>(block - 1)]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    if (opts.workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < opts.workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<TetraReport> all;
    for (auto& b : blocks)
        for (auto& r : b) all.push_back(std::move(r));
    std::sort(all.begin(), all.end(), TupleOrder{});
    for (const TetraReport& r : all) emit(r);
}

}  // namespace tetrazero
