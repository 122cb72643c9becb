#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "lsym/invariants.hpp"

using namespace lsym;

TEST_CASE("multigraph counts, hand-enumerated") {
    // loopless: symmetric nonnegative matrices, zero diagonal, row sums tau
    CHECK(multigraph_count(Partition{}, false) == 1);
    CHECK(multigraph_count(Partition{1}, false) == 0);
    CHECK(multigraph_count(Partition{1, 1}, false) == 1);
    CHECK(multigraph_count(Partition{2}, false) == 0);
    CHECK(multigraph_count(Partition{2, 2}, false) == 1);
    CHECK(multigraph_count(Partition{2, 1, 1}, false) == 1);
    CHECK(multigraph_count(Partition{1, 1, 1}, false) == 0);
    CHECK(multigraph_count(Partition{1, 1, 1, 1}, false) == 3);
    CHECK(multigraph_count(Partition{3, 1}, false) == 0);
    CHECK(multigraph_count(Partition{3, 1}, true) == 1);
    // with loops: even diagonal allowed, a loop adds 2 to its row sum
    CHECK(multigraph_count(Partition{2}, true) == 1);
    CHECK(multigraph_count(Partition{1}, true) == 0);
    CHECK(multigraph_count(Partition{2, 2}, true) == 2);
    CHECK(multigraph_count(Partition{2, 1, 1}, true) == 2);
    CHECK(multigraph_count(Partition{4}, true) == 1);
    CHECK(multigraph_count(Partition{1, 1, 1, 1}, true) == 3);
}

TEST_CASE("multigraph counts match the stable generating series") {
    auto loopless = generating_series(Group::O, PowerKind::exterior, 6);
    auto loops = generating_series(Group::Sp, PowerKind::exterior, 6);
    for (const auto& tau : partitions_up_to(6)) {
        CHECK(m_coefficient(loopless, tau) ==
              Rational(multigraph_count(tau, false)));
        CHECK(m_coefficient(loops, tau) == Rational(multigraph_count(tau, true)));
    }
}

TEST_CASE("symplectic constant-term values") {
    CHECK(weyl_ct_sp(2, Partition{}) == 1);
    CHECK(weyl_ct_sp(2, Partition{1}) == 0);
    CHECK(weyl_ct_sp(2, Partition{2}) == 1); // wedge^2 of C^2 is trivial
    CHECK(weyl_ct_sp(2, Partition{1, 1}) == 1);
    CHECK(weyl_ct_sp(2, Partition{1, 1, 1, 1}) == 2); // below stable value 3
    CHECK(weyl_ct_sp(2, Partition{2}, /*symmetric=*/true) == 0);
    CHECK(weyl_ct_sp(2, Partition{1, 1}, /*symmetric=*/true) == 1);
    CHECK_THROWS_AS(weyl_ct_sp(3, Partition{}), std::domain_error);
    CHECK_THROWS_AS(weyl_ct_sp(2, Partition{9}), std::domain_error);
}

TEST_CASE("orthogonal constant-term values") {
    CHECK(weyl_ct_o(1, Partition{}) == 1);
    CHECK(weyl_ct_o(1, Partition{1}) == 0);   // O(1) = {+-1}, average of +-1
    CHECK(weyl_ct_o(1, Partition{1, 1}) == 1);
    CHECK(weyl_ct_o(2, Partition{1, 1}) == 1);
    CHECK(weyl_ct_o(2, Partition{2}) == 0); // wedge^2 C^2 = det, not trivial on O(2)
    CHECK(weyl_ct_o(2, Partition{2}, /*symmetric=*/true) == 1);
    CHECK(weyl_ct_o(3, Partition{1, 1, 1, 1}) == 3);
    CHECK(weyl_ct_o(3, Partition{2, 1, 1}) == 1);
}

TEST_CASE("constant-term oracles agree with the series in the stable range") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& tau : partitions_up_to(std::min(5, n)))
            for (bool sym : {false, true}) {
                PowerKind kind = sym ? PowerKind::symmetric : PowerKind::exterior;
                if (n % 2 == 0)
                    CHECK(weyl_ct_sp(n, tau, sym) ==
                          invariant_dim(Group::Sp, n, tau, kind));
                CHECK(weyl_ct_o(n, tau, sym) ==
                      invariant_dim(Group::O, n, tau, kind));
            }
}

TEST_CASE("haar samples have tiny residuals and are reproducible") {
    for (auto [g, n] : {std::pair{Group::O, 3}, {Group::O, 4}, {Group::Sp, 2},
                        {Group::Sp, 4}}) {
        HaarSampler sampler(g, n, 7);
        for (std::uint64_t i = 0; i < 50; ++i) {
            auto mat = sampler.sample(i);
            CHECK(sampler.residual(mat) < 1e-10);
        }
        CHECK(sampler.sample(17) == sampler.sample(17));
    }
    CHECK_THROWS_AS(HaarSampler(Group::Sp, 3, 1), std::invalid_argument);
}

TEST_CASE("monte carlo is bitwise deterministic across worker counts") {
    std::vector<Partition> taus{Partition{1}, Partition{2, 1}, Partition{1, 1}};
    auto a = haar_mc_batch(Group::O, 3, taus, 20000, 123, 1);
    auto b = haar_mc_batch(Group::O, 3, taus, 20000, 123, 8);
    REQUIRE(a.per_tau.size() == b.per_tau.size());
    for (std::size_t i = 0; i < a.per_tau.size(); ++i) {
        CHECK(a.per_tau[i].estimate == b.per_tau[i].estimate);
        CHECK(a.per_tau[i].stderr_est == b.per_tau[i].stderr_est);
    }
    CHECK(a.max_residual == b.max_residual);
}

TEST_CASE("monte carlo matches exact dimensions") {
    for (auto [g, n] : {std::pair{Group::O, 3}, {Group::Sp, 2}}) {
        std::vector<Partition> taus{Partition{1, 1}, Partition{2, 2},
                                    Partition{1, 1, 1, 1}};
        auto batch = haar_mc_batch(g, n, taus, 100000, 2024);
        for (std::size_t i = 0; i < taus.size(); ++i) {
            double exact = static_cast<double>(
                g == Group::Sp ? weyl_ct_sp(n, taus[i]) : weyl_ct_o(n, taus[i]));
            double tol = 4.0 * std::max(batch.per_tau[i].stderr_est, 1e-12);
            CHECK(std::abs(batch.per_tau[i].estimate - exact) <= tol);
            CHECK(std::abs(batch.per_tau[i].imag_mean) < 1e-10);
        }
        CHECK(batch.max_residual < 1e-10);
    }
}

// Distributional self-check of the sampler construction: plain
// orthogonalization of a Gaussian matrix is only Haar when the triangular
// factor has a positive diagonal, which modified Gram-Schmidt guarantees.
// Two checks target a wrong-distribution bug directly.
TEST_CASE("haar distribution self-check") {
    // E[tr M] = 0 on O(3): a biased sampler (e.g. positive-diagonal QR
    // without the sign fix) shifts the trace visibly.
    const std::uint64_t ns = 100000;
    auto est = haar_mc_dim(Group::O, 3, Partition{1}, ns, 77);
    CHECK(std::abs(est.estimate) <= 4.0 * est.stderr_est);

    // On SO(2) the rotation angle must be uniform: chi-square over 8 bins
    // of the angle of det-positive O(2) samples.
    HaarSampler sampler(Group::O, 2, 31);
    const int bins = 8;
    std::vector<int> hist(bins, 0);
    int kept = 0;
    for (std::uint64_t i = 0; i < 20000; ++i) {
        auto m = sampler.sample(i);
        double a = m[0].real(), b = m[1].real();
        double c = m[2].real(), d = m[3].real();
        if (a * d - b * c < 0) continue; // reflection component
        double theta = std::atan2(c, a); // rotation angle in (-pi, pi]
        int bin = static_cast<int>((theta + M_PI) / (2 * M_PI) * bins);
        if (bin == bins) bin = 0;
        ++hist[static_cast<std::size_t>(bin)];
        ++kept;
    }
    REQUIRE(kept > 5000);
    double expect = static_cast<double>(kept) / bins;
    double chi2 = 0;
    for (int h : hist) chi2 += (h - expect) * (h - expect) / expect;
    // 7 degrees of freedom; 24.3 is the 0.1% quantile
    CHECK(chi2 < 24.3);
}
