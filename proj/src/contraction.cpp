#include "dccm/contraction.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace dccm {

namespace {

constexpr std::uint64_t kContractionStream = 3;

// The vectors entering all three conditions for one pair (x, y).
struct Row {
    std::size_t pair_index;
    VectorE image;   // p(Tx, Ty)
    VectorE from_x;  // p(x, Tx)
    VectorE from_y;  // p(y, Ty)
    VectorE base;    // p(x, y)
};

std::vector<Row> build_rows(const SpaceDef& s, const SelfMap& T,
                            std::span<const PointPair> pairs) {
    if (pairs.empty()) throw DomainError("contraction estimate needs at least one pair");
    std::vector<Row> rows;
    rows.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [x, y] = pairs[i];
        const Point tx = T(x);
        const Point ty = T(y);
        rows.push_back({i, s.p(tx, ty), s.p(x, tx), s.p(y, ty), s.p(x, y)});
    }
    return rows;
}

// Smallest slack of  a·from_x + b·from_y + c·base - image  over coordinates.
double slack(const Row& r, double a, double b, double c) {
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t q = 0; q < r.image.dim(); ++q) {
        const double bound = a * r.from_x[q] + b * r.from_y[q] + c * r.base[q];
        worst = std::min(worst, bound - r.image[q]);
    }
    return worst;
}

struct ScanResult {
    std::optional<std::array<double, 3>> found;
    std::size_t witness_row = 0;
};

// Candidates arrive in visiting order; a row that refutes one candidate is
// moved to the front, since it is likely to refute the next one too.
template <typename Candidates>
ScanResult scan(std::vector<Row>& rows, double tol, Candidates&& candidates) {
    ScanResult result;
    std::size_t last_refuter = rows.front().pair_index;
    candidates([&](double a, double b, double c) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (slack(rows[r], a, b, c) < -tol) {
                last_refuter = rows[r].pair_index;
                std::rotate(rows.begin(), rows.begin() + std::ptrdiff_t(r),
                            rows.begin() + std::ptrdiff_t(r) + 1);
                return false;
            }
        }
        result.found = std::array<double, 3>{a, b, c};
        return true;
    });
    if (result.found) {
        const auto [a, b, c] = *result.found;
        double least = std::numeric_limits<double>::infinity();
        for (const Row& row : rows) {
            const double sl = slack(row, a, b, c);
            if (sl < least || (sl == least && row.pair_index < result.witness_row)) {
                least = sl;
                result.witness_row = row.pair_index;
            }
        }
    } else {
        result.witness_row = last_refuter;
    }
    return result;
}

std::size_t max_units(double step) {
    if (!(step > 0.0 && step < 1.0)) throw DomainError("grid step must lie in (0, 1)");
    std::size_t m = 0;
    while (double(m + 1) * step < 1.0 - 1e-12) ++m;
    return m;
}

}  // namespace

std::string_view to_string(Family f) {
    switch (f) {
        case Family::Banach: return "banach";
        case Family::Kannan: return "kannan";
        case Family::Reich: return "reich";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    if (name == "banach") return Family::Banach;
    if (name == "kannan") return Family::Kannan;
    if (name == "reich") return Family::Reich;
    throw DomainError("unknown contraction family '" + std::string(name) + "'");
}

double ContractionParams::rate() const {
    switch (family) {
        case Family::Banach: return k;
        case Family::Kannan: return a / (1.0 - b);
        case Family::Reich: return (a + c) / (1.0 - b);
    }
    return k;
}

void ContractionParams::validate() const {
    auto unit = [](double v) { return v >= 0.0 && v < 1.0; };
    switch (family) {
        case Family::Banach:
            if (!unit(k)) throw DomainError("Banach constant k must lie in [0, 1)");
            return;
        case Family::Kannan:
            if (!unit(a) || !unit(b) || !(a + b < 1.0)) {
                throw DomainError("Kannan constants need a, b in [0, 1) and a + b < 1");
            }
            return;
        case Family::Reich:
            if (!unit(a) || !unit(b) || !unit(c) || !(a + b + c < 1.0)) {
                throw DomainError("Reich constants need a, b, c in [0, 1) and a + b + c < 1");
            }
            return;
    }
}

std::vector<PointPair> sample_pairs(const SpaceDef& s, const PairSpec& spec) {
    std::vector<PointPair> pairs;
    if (spec.include_grid) {
        for (const Point& x : s.grid()) {
            for (const Point& y : s.grid()) pairs.emplace_back(x, y);
        }
    }
    Sampler sampler(derive_seed(spec.seed, kContractionStream));
    for (std::size_t i = 0; i < spec.n_random; ++i) {
        const Point x = s.sample(sampler);
        const Point y = s.sample(sampler);
        pairs.emplace_back(x, y);
    }
    return pairs;
}

ContractionEstimate estimate_banach(const SpaceDef& s, const SelfMap& T,
                                    std::span<const PointPair> pairs) {
    const std::vector<Row> rows = build_rows(s, T, pairs);
    double k_hat = 0.0;
    std::size_t worst = 0;
    for (const Row& r : rows) {
        for (std::size_t q = 0; q < r.image.dim(); ++q) {
            const double num = r.image[q];
            const double den = r.base[q];
            double ratio = 0.0;
            if (den != 0.0) {
                ratio = num / den;
            } else if (num != 0.0) {
                ratio = std::numeric_limits<double>::infinity();
            }
            if (ratio > k_hat) {
                k_hat = ratio;
                worst = r.pair_index;
            }
        }
    }
    ContractionEstimate est;
    est.params = ContractionParams::banach(k_hat);
    est.feasible = k_hat < 1.0;
    est.worst_pair = pairs[worst];
    est.n_pairs = pairs.size();
    return est;
}

ContractionEstimate estimate_kannan(const SpaceDef& s, const SelfMap& T,
                                    std::span<const PointPair> pairs, double grid_step) {
    const std::size_t m = max_units(grid_step);
    std::vector<Row> rows = build_rows(s, T, pairs);
    const ScanResult res = scan(rows, s.target().tol(), [&](auto&& try_candidate) {
        for (std::size_t sum = 0; sum <= m; ++sum) {
            for (std::size_t i = 0; i <= sum; ++i) {
                if (try_candidate(double(i) * grid_step, double(sum - i) * grid_step, 0.0)) {
                    return;
                }
            }
        }
    });
    ContractionEstimate est;
    est.params.family = Family::Kannan;
    est.feasible = res.found.has_value();
    if (res.found) {
        est.params.a = (*res.found)[0];
        est.params.b = (*res.found)[1];
    }
    est.worst_pair = pairs[res.witness_row];
    est.n_pairs = pairs.size();
    return est;
}

ContractionEstimate estimate_reich(const SpaceDef& s, const SelfMap& T,
                                   std::span<const PointPair> pairs, double grid_step) {
    const std::size_t m = max_units(grid_step);
    std::vector<Row> rows = build_rows(s, T, pairs);
    const ScanResult res = scan(rows, s.target().tol(), [&](auto&& try_candidate) {
        for (std::size_t sum = 0; sum <= m; ++sum) {
            for (std::size_t i = 0; i <= sum; ++i) {
                for (std::size_t j = 0; i + j <= sum; ++j) {
                    const std::size_t l = sum - i - j;
                    if (try_candidate(double(i) * grid_step, double(j) * grid_step,
                                      double(l) * grid_step)) {
                        return;
                    }
                }
            }
        }
    });
    ContractionEstimate est;
    est.params.family = Family::Reich;
    est.feasible = res.found.has_value();
    if (res.found) {
        est.params.a = (*res.found)[0];
        est.params.b = (*res.found)[1];
        est.params.c = (*res.found)[2];
    }
    est.worst_pair = pairs[res.witness_row];
    est.n_pairs = pairs.size();
    return est;
}

std::vector<PointPair> contraction_violations(const SpaceDef& s, const SelfMap& T,
                                              const ContractionParams& params,
                                              std::span<const PointPair> pairs) {
    const std::vector<Row> rows = build_rows(s, T, pairs);
    double a = params.a, b = params.b, c = params.c;
    if (params.family == Family::Banach) {
        a = b = 0.0;
        c = params.k;
    } else if (params.family == Family::Kannan) {
        c = 0.0;
    }
    std::vector<PointPair> out;
    for (const Row& r : rows) {
        if (slack(r, a, b, c) < -s.target().tol()) out.push_back(pairs[r.pair_index]);
    }
    return out;
}

}  // namespace dccm
