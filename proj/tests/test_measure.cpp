#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "qdm/error.hpp"
#include "qdm/linalg.hpp"
#include "qdm/measure.hpp"
#include "qdm/parity.hpp"
#include "qdm/random.hpp"

using namespace qdm;

TEST_CASE("trine on the vertical state gives (0, 1/2, 1/2)") {
    const Povm trine = make_trine();
    REQUIRE(trine.outcomes() == 3);
    const ProbDist p = apply(trine, DensityMatrix::from_pure(vertical()));
    CHECK(std::abs(p[0] - 0.0) <= 1e-12);
    CHECK(std::abs(p[1] - 0.5) <= 1e-12);
    CHECK(std::abs(p[2] - 0.5) <= 1e-12);
}

TEST_CASE("trine elements and completeness") {
    const Povm trine = make_trine();
    const double r3 = std::sqrt(3.0) / 6.0;
    CHECK(std::abs(trine[0](0, 0) - 2.0 / 3.0) < 1e-15);
    CHECK(std::abs(trine[0](1, 1)) < 1e-15);
    CHECK(std::abs(trine[1](0, 0) - 1.0 / 6.0) < 1e-15);
    CHECK(std::abs(trine[1](1, 1) - 0.5) < 1e-15);
    CHECK(std::abs(std::abs(trine[1](0, 1)) - r3) < 1e-15);
    CHECK(std::abs(trine[1](0, 1) + trine[2](0, 1)) < 1e-15);
    CHECK(max_abs_diff(trine[0] + trine[1] + trine[2], ComplexMatrix::identity(2)) < 1e-15);
    CHECK_FALSE(is_pvm(trine));
}

TEST_CASE("polarization PVM") {
    const Povm z = make_polarization_pvm(0.0);
    const std::vector<double> e0{1, 0}, e1{0, 1};
    CHECK(max_abs_diff(z[0], ComplexMatrix::diagonal(e0)) < 1e-15);
    CHECK(max_abs_diff(z[1], ComplexMatrix::diagonal(e1)) < 1e-15);
    const Povm d = make_polarization_pvm(std::numbers::pi / 4);
    for (const auto& e : d.elements())
        for (const auto& x : e.entries()) CHECK(std::abs(std::abs(x) - 0.5) < 1e-15);
    for (double a : {0.1, 0.7, 1.3, 2.9}) CHECK(is_pvm(make_polarization_pvm(a)));
    const double a = 0.37;
    const ProbDist p = apply(make_polarization_pvm(a), DensityMatrix::from_pure(horizontal()));
    CHECK(p[0] == doctest::Approx(std::pow(std::cos(a), 2)).epsilon(1e-14));
    CHECK(p[1] == doctest::Approx(std::pow(std::sin(a), 2)).epsilon(1e-14));
}

TEST_CASE("POVM validation names the failed invariant") {
    auto invariant_of = [](std::vector<ComplexMatrix> els) -> std::string {
        try {
            Povm p(std::move(els));
        } catch (const InvalidValue& e) {
            return e.invariant();
        }
        return "";
    };
    const std::vector<double> a{0.5, 0.5};
    CHECK(invariant_of({ComplexMatrix::diagonal(a)}) == "completeness");
    const std::vector<double> neg{1.5, 1.0}, neg2{-0.5, 0.0};
    CHECK(invariant_of({ComplexMatrix::diagonal(neg), ComplexMatrix::diagonal(neg2)}) == "positive-semidefinite");
    CHECK(invariant_of({ComplexMatrix{{1, 0.1}, {0, 1}}, ComplexMatrix{{0, -0.1}, {0, 0}}}) == "hermitian");
    CHECK(invariant_of({}) == "non-empty");
}

TEST_CASE("is_pvm rejects more outcomes than the dimension") {
    // Three rank-one elements that sum to the identity cannot be orthogonal projectors.
    CHECK_FALSE(is_pvm(random_povm(2, 3, 1)));
    Rng rng(2);
    CHECK(is_pvm(basis_pvm(haar_unitary(3, rng))));
}

TEST_CASE("random_povm") {
    const Povm one = random_povm(3, 1, 7);
    REQUIRE(one.outcomes() == 1);
    CHECK(one[0] == ComplexMatrix::identity(3));
    CHECK(random_povm(4, 5, 42) == random_povm(4, 5, 42));
    CHECK_FALSE(random_povm(4, 5, 42) == random_povm(4, 5, 43));
    for (std::uint64_t seed = 0; seed < 50; ++seed) CHECK_NOTHROW(random_povm(2 + seed % 4, 1 + seed % 6, seed));
}

TEST_CASE("Born rule output sums to one and is affine in the state") {
    Rng rng(12);
    for (int t = 0; t < 100; ++t) {
        const auto d = static_cast<std::size_t>(rng.uniform_int(2, 5));
        const Povm e = random_povm(d, static_cast<std::size_t>(rng.uniform_int(1, 6)), rng.next_seed());
        const DensityMatrix a = random_density(d, d, rng);
        const DensityMatrix b = random_density(d, 1, rng);
        const double mu = rng.uniform();
        const ProbDist pa = apply(e, a);
        const ProbDist pb = apply(e, b);
        const ProbDist pm = apply(e, mixture(mu, a, b));
        double total = 0.0;
        for (std::size_t x = 0; x < pm.size(); ++x) {
            total += pm[x];
            CHECK(std::abs(pm[x] - (mu * pa[x] + (1 - mu) * pb[x])) <= 1e-9);
            const double direct = (oracle::to_eigen(a.matrix()) * oracle::to_eigen(e[x])).trace().real();
            CHECK(std::abs(pa[x] - direct) <= 1e-9);
        }
        CHECK(std::abs(total - 1.0) <= 1e-9);
    }
    CHECK_THROWS_AS(apply(make_trine(), random_density(3, 3, rng)), DimensionMismatch);
}

TEST_CASE("Helstrom PVM examples") {
    const DensityMatrix h = DensityMatrix::from_pure(horizontal());
    const DensityMatrix v = DensityMatrix::from_pure(vertical());
    const Povm orth = helstrom_pvm(h, v);
    CHECK(max_abs_diff(orth[0], h.matrix()) < 1e-12);
    CHECK(max_abs_diff(orth[1], v.matrix()) < 1e-12);
    CHECK(pe(apply(orth, h, v)) == doctest::Approx(0.0));

    const Povm same = helstrom_pvm(h, h);
    CHECK(is_pvm(same));
    CHECK(pe(apply(same, h, h)) == doctest::Approx(0.5));

    const QuantumPair q = build_parity_states(ParityConfig(std::numbers::pi / 8, 2));
    const Povm hel = helstrom_pvm(q.rho0(), q.rho1());
    CHECK(is_pvm(hel));
    CHECK(pe(apply(hel, q.rho0(), q.rho1())) == doctest::Approx(0.25).epsilon(1e-12));
    Rng rng(1);
    CHECK_THROWS_AS(helstrom_pvm(h, random_density(3, 3, rng)), DimensionMismatch);
}

TEST_CASE("Helstrom PE on the parity pair matches an exhaustive product-angle search") {
    // Product polarization measurements on both qubits followed by the best
    // classical guess cannot beat Helstrom; the grid gets within the grid step.
    const double a = std::numbers::pi / 8;
    const QuantumPair q = build_parity_states(ParityConfig(a, 2));
    const double helstrom = pe(apply(helstrom_pvm(q.rho0(), q.rho1()), q.rho0(), q.rho1()));
    double best = 0.5;
    for (int i = 0; i <= 200; ++i) {
        const double t = std::numbers::pi * i / 200;
        const Povm m = make_polarization_pvm(t);
        std::vector<ComplexMatrix> els;
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) els.push_back(tensor_product(m[static_cast<std::size_t>(x)], m[static_cast<std::size_t>(y)]));
        best = std::min(best, pe(apply(Povm(els), q.rho0(), q.rho1())));
    }
    CHECK(helstrom <= best + 1e-12);
    CHECK(best == doctest::Approx(helstrom).epsilon(1e-3));
}

TEST_CASE("Helstrom minimality against random POVMs and zero-eigenspace reassignment") {
    Rng rng(31);
    for (int t = 0; t < 50; ++t) {
        const auto d = static_cast<std::size_t>(rng.uniform_int(2, 5));
        const DensityMatrix r0 = random_density(d, static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(d))), rng);
        const DensityMatrix r1 = random_density(d, static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(d))), rng);
        const double first = pe(apply(helstrom_pvm(r0, r1, {}, ZeroEigenspace::kFirst), r0, r1));
        const double second = pe(apply(helstrom_pvm(r0, r1, {}, ZeroEigenspace::kSecond), r0, r1));
        CHECK(std::abs(first - second) <= 1e-9);
        const double closed = 0.5 - 0.25 * oracle::trace_norm(oracle::to_eigen(r0.matrix() - r1.matrix()));
        CHECK(std::abs(first - closed) <= 1e-10);
        for (int k = 0; k < 20; ++k) {
            const Povm e = random_povm(d, static_cast<std::size_t>(rng.uniform_int(1, 6)), rng.next_seed());
            CHECK(pe(apply(e, r0, r1)) >= first - 1e-9);
        }
    }
    // A pair whose difference has a zero eigenvalue: the split changes, PE does not.
    const std::vector<double> a{0.5, 0.5, 0.0}, b{0.5, 0.0, 0.5};
    const DensityMatrix r0(ComplexMatrix::diagonal(a)), r1(ComplexMatrix::diagonal(b));
    const Povm f = helstrom_pvm(r0, r1, {}, ZeroEigenspace::kFirst);
    const Povm s = helstrom_pvm(r0, r1, {}, ZeroEigenspace::kSecond);
    CHECK(std::abs(f[0](0, 0) - 1.0) < 1e-12);
    CHECK(std::abs(s[0](0, 0)) < 1e-12);
    CHECK(pe(apply(f, r0, r1)) == doctest::Approx(pe(apply(s, r0, r1))));
}
