#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <future>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "lsym/partition.hpp"

namespace lsym {

enum class Group { O, Sp };

inline const char* group_name(Group g) { return g == Group::O ? "O" : "Sp"; }

inline Group parse_group(const std::string& s) {
    if (s == "O" || s == "o") return Group::O;
    if (s == "Sp" || s == "sp" || s == "SP") return Group::Sp;
    throw std::invalid_argument("unknown group '" + s + "' (expected O or Sp)");
}

namespace detail {

using cplx = std::complex<double>;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Quaternion a + b j in the complex pair representation; j c = conj(c) j.
struct Quaternion {
    cplx a{0.0, 0.0};
    cplx b{0.0, 0.0};

    friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
        return {x.a * y.a - x.b * std::conj(y.b), x.a * y.b + x.b * std::conj(y.a)};
    }
    Quaternion conj() const { return {std::conj(a), -b}; }
    double norm2() const { return std::norm(a) + std::norm(b); }
    Quaternion scaled(double s) const { return {a * s, b * s}; }
};

// Modified Gram-Schmidt with one reorthogonalization pass. For Gaussian
// input the R diagonal comes out positive real, so the resulting Q is
// exactly Haar distributed on O(n).
inline std::vector<double> haar_orthogonal(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> q(static_cast<std::size_t>(n) * n);
    for (auto& v : q) v = gauss(rng);
    auto col = [&](int j, int i) -> double& {
        return q[static_cast<std::size_t>(i) * n + j];
    };
    for (int j = 0; j < n; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (int k = 0; k < j; ++k) {
                double dot = 0;
                for (int i = 0; i < n; ++i) dot += col(k, i) * col(j, i);
                for (int i = 0; i < n; ++i) col(j, i) -= dot * col(k, i);
            }
        }
        double nrm = 0;
        for (int i = 0; i < n; ++i) nrm += col(j, i) * col(j, i);
        nrm = std::sqrt(nrm);
        for (int i = 0; i < n; ++i) col(j, i) /= nrm;
    }
    return q;
}

// Haar on the compact symplectic group Sp(m) via Gram-Schmidt over the
// quaternions, same positivity argument as the real case.
inline std::vector<Quaternion> haar_quaternionic(int m, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Quaternion> q(static_cast<std::size_t>(m) * m);
    for (auto& v : q)
        v = Quaternion{cplx(gauss(rng), gauss(rng)), cplx(gauss(rng), gauss(rng))};
    auto col = [&](int j, int i) -> Quaternion& {
        return q[static_cast<std::size_t>(i) * m + j];
    };
    for (int j = 0; j < m; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (int k = 0; k < j; ++k) {
                Quaternion dot{};
                for (int i = 0; i < m; ++i)
                    dot = dot + col(k, i).conj() * col(j, i);
                for (int i = 0; i < m; ++i)
                    col(j, i) = col(j, i) - col(k, i) * dot;
            }
        }
        double nrm2 = 0;
        for (int i = 0; i < m; ++i) nrm2 += col(j, i).norm2();
        double inv = 1.0 / std::sqrt(nrm2);
        for (int i = 0; i < m; ++i) col(j, i) = col(j, i).scaled(inv);
    }
    return q;
}

// Complex 2m x 2m representation [[A, B], [-conj(B), conj(A)]] of a
// quaternionic matrix A + B j; unitary quaternionic input lands in
// U(2m) with M^T J M = J for J = [[0, I], [-I, 0]].
inline std::vector<cplx> embed_quaternionic(const std::vector<Quaternion>& q, int m) {
    int n = 2 * m;
    std::vector<cplx> mat(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const Quaternion& v = q[static_cast<std::size_t>(i) * m + j];
            mat[static_cast<std::size_t>(i) * n + j] = v.a;
            mat[static_cast<std::size_t>(i) * n + (j + m)] = v.b;
            mat[static_cast<std::size_t>(i + m) * n + j] = -std::conj(v.b);
            mat[static_cast<std::size_t>(i + m) * n + (j + m)] = std::conj(v.a);
        }
    return mat;
}

inline double orthogonality_residual(const std::vector<cplx>& mat, int n) {
    double worst = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx dot{0, 0};
            for (int k = 0; k < n; ++k)
                dot += std::conj(mat[static_cast<std::size_t>(k) * n + i]) *
                       mat[static_cast<std::size_t>(k) * n + j];
            if (i == j) dot -= 1.0;
            worst = std::max(worst, std::abs(dot));
        }
    return worst;
}

// max |(M^T J M - J)_{ij}| for J = [[0, I], [-I, 0]].
inline double symplectic_residual(const std::vector<cplx>& mat, int n) {
    int m = n / 2;
    auto j_mat = [&](int r, int c) -> double {
        if (r < m && c == r + m) return 1.0;
        if (r >= m && c == r - m) return -1.0;
        return 0.0;
    };
    double worst = 0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            cplx acc{0, 0};
            for (int a = 0; a < n; ++a) {
                // (M^T J)_{ra} = sum_b M_{br} J_{ba}
                cplx mtj{0, 0};
                for (int b = 0; b < n; ++b) {
                    double jv = j_mat(b, a);
                    if (jv != 0.0)
                        mtj += mat[static_cast<std::size_t>(b) * n + r] * jv;
                }
                acc += mtj * mat[static_cast<std::size_t>(a) * n + c];
            }
            acc -= j_mat(r, c);
            worst = std::max(worst, std::abs(acc));
        }
    return worst;
}

// e_1..e_max of the eigenvalues of mat, via traces of powers and the
// Newton recursion j e_j = sum_{i<=j} (-1)^{i-1} e_{j-i} p_i. Avoids an
// eigensolver entirely.
inline std::vector<cplx> elementary_from_traces(const std::vector<cplx>& mat, int n,
                                                int max) {
    std::vector<cplx> power = mat; // mat^k
    std::vector<cplx> traces(static_cast<std::size_t>(max) + 1);
    for (int k = 1; k <= max; ++k) {
        cplx tr{0, 0};
        for (int i = 0; i < n; ++i) tr += power[static_cast<std::size_t>(i) * n + i];
        traces[static_cast<std::size_t>(k)] = tr;
        if (k == max) break;
        std::vector<cplx> next(static_cast<std::size_t>(n) * n, cplx{0, 0});
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                cplx v = power[static_cast<std::size_t>(i) * n + l];
                if (v == cplx{0, 0}) continue;
                for (int j = 0; j < n; ++j)
                    next[static_cast<std::size_t>(i) * n + j] +=
                        v * mat[static_cast<std::size_t>(l) * n + j];
            }
        power = std::move(next);
    }
    std::vector<cplx> e(static_cast<std::size_t>(max) + 1);
    e[0] = cplx{1, 0};
    for (int j = 1; j <= max; ++j) {
        cplx acc{0, 0};
        for (int i = 1; i <= j; ++i) {
            cplx term = e[static_cast<std::size_t>(j - i)] * traces[static_cast<std::size_t>(i)];
            acc += (i % 2 == 1) ? term : -term;
        }
        e[static_cast<std::size_t>(j)] = acc / static_cast<double>(j);
    }
    return e;
}

} // namespace detail

/**
 * Deterministic Haar sampler: sample(index) depends only on (group, n,
 * seed, index), so results are reproducible independent of parallelism.
 * O(n) samples are real orthogonal; Sp(n) samples are unitary and
 * preserve the standard symplectic form.
 */
class HaarSampler {
public:
    HaarSampler(Group group, int n, std::uint64_t seed)
        : group_(group), n_(n), seed_(seed) {
        if (n < 1) throw std::invalid_argument("n must be >= 1");
        if (group == Group::Sp && n % 2 != 0)
            throw std::invalid_argument("Sp(n) requires even n");
    }

    Group group() const { return group_; }
    int n() const { return n_; }

    std::vector<detail::cplx> sample(std::uint64_t index) const {
        std::mt19937_64 rng(detail::splitmix64(seed_ ^ detail::splitmix64(index)));
        if (group_ == Group::O) {
            auto q = detail::haar_orthogonal(n_, rng);
            std::vector<detail::cplx> mat(q.size());
            for (std::size_t i = 0; i < q.size(); ++i) mat[i] = q[i];
            return mat;
        }
        auto q = detail::haar_quaternionic(n_ / 2, rng);
        return detail::embed_quaternionic(q, n_ / 2);
    }

    // Orthogonality (O) or unitarity+symplecticity (Sp) residual.
    double residual(const std::vector<detail::cplx>& mat) const {
        double r = detail::orthogonality_residual(mat, n_);
        if (group_ == Group::Sp)
            r = std::max(r, detail::symplectic_residual(mat, n_));
        return r;
    }

private:
    Group group_;
    int n_;
    std::uint64_t seed_;
};

struct McEstimate {
    double estimate = 0;
    double stderr_est = 0;
    double imag_mean = 0; // sanity statistic; should be ~0
};

struct McBatchResult {
    std::vector<McEstimate> per_tau;
    double max_residual = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/**
 * Monte Carlo mean of prod_i e_{tau_i}(eigenvalues of M) over Haar
 * samples, for several tau at once (the per-sample eigenvalue work is
 * shared). Accumulation runs over fixed-size index chunks reduced in
 * order, so output is bitwise identical for any worker count.
 */
inline McBatchResult haar_mc_batch(Group group, int n, const std::vector<Partition>& taus,
                                   std::uint64_t samples, std::uint64_t seed,
                                   unsigned workers = std::thread::hardware_concurrency()) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    HaarSampler sampler(group, n, seed);
    int max_part = 0;
    for (const auto& tau : taus)
        if (!tau.empty()) max_part = std::max(max_part, tau.parts().front());

    const std::uint64_t chunk = 4096;
    const std::uint64_t nchunks = (samples + chunk - 1) / chunk;
    std::size_t nt = taus.size();

    struct ChunkAcc {
        std::vector<double> sum, sum_sq, sum_imag;
        double max_residual = 0;
    };

    auto run_chunk = [&](std::uint64_t ci) {
        ChunkAcc acc;
        acc.sum.assign(nt, 0.0);
        acc.sum_sq.assign(nt, 0.0);
        acc.sum_imag.assign(nt, 0.0);
        std::uint64_t lo = ci * chunk, hi = std::min(samples, lo + chunk);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            auto mat = sampler.sample(idx);
            acc.max_residual = std::max(acc.max_residual, sampler.residual(mat));
            auto e = max_part > 0
                         ? detail::elementary_from_traces(mat, n, max_part)
                         : std::vector<detail::cplx>{detail::cplx{1, 0}};
            for (std::size_t t = 0; t < nt; ++t) {
                detail::cplx v{1, 0};
                for (int part : taus[t].parts())
                    v *= e[static_cast<std::size_t>(part)];
                acc.sum[t] += v.real();
                acc.sum_sq[t] += v.real() * v.real();
                acc.sum_imag[t] += v.imag();
            }
        }
        return acc;
    };

    std::vector<ChunkAcc> chunks(nchunks);
    if (workers <= 1 || nchunks <= 1) {
        for (std::uint64_t ci = 0; ci < nchunks; ++ci) chunks[ci] = run_chunk(ci);
    } else {
        std::vector<std::future<void>> futs;
        std::atomic<std::uint64_t> next{0};
        for (unsigned w = 0; w < workers; ++w)
            futs.push_back(std::async(std::launch::async, [&]() {
                for (std::uint64_t ci = next.fetch_add(1); ci < nchunks;
                     ci = next.fetch_add(1))
                    chunks[ci] = run_chunk(ci);
            }));
        for (auto& f : futs) f.get();
    }

    McBatchResult out;
    out.samples = samples;
    out.seed = seed;
    out.per_tau.resize(nt);
    std::vector<double> sum(nt, 0.0), sum_sq(nt, 0.0), sum_imag(nt, 0.0);
    for (const auto& c : chunks) {
        out.max_residual = std::max(out.max_residual, c.max_residual);
        for (std::size_t t = 0; t < nt; ++t) {
            sum[t] += c.sum[t];
            sum_sq[t] += c.sum_sq[t];
            sum_imag[t] += c.sum_imag[t];
        }
    }
    double ns = static_cast<double>(samples);
    for (std::size_t t = 0; t < nt; ++t) {
        double mean = sum[t] / ns;
        double var = std::max(0.0, sum_sq[t] / ns - mean * mean);
        out.per_tau[t] = McEstimate{mean, std::sqrt(var / ns), sum_imag[t] / ns};
    }
    return out;
}

inline McEstimate haar_mc_dim(Group group, int n, const Partition& tau,
                              std::uint64_t samples, std::uint64_t seed) {
    return haar_mc_batch(group, n, {tau}, samples, seed).per_tau.front();
}

} // namespace lsym
