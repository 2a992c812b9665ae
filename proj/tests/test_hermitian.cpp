#include <doctest.h>

#include "hermitian_gen.hpp"
#include "kinemetry/hermitian.hpp"

using namespace kinemetry;

namespace {

LambdaPiPoly one() { return LambdaPiPoly(PiPoly::constant(1)); }

ValElement mu(int n, int k, int q) {
    ValElement x;
    x.n = n;
    x.add({k, q, Family::Mu}, one());
    return x;
}

AreaElement area1(int n, int k, int q, Family f, const LambdaPiPoly& c) {
    AreaElement x;
    x.n = n;
    x.add({k, q, f}, c);
    return x;
}

}  // namespace

TEST_CASE("index ranges, including the q = k-n boundary of the N family") {
    CHECK(valid_mu_index(2, 3, 1));
    CHECK(valid_mu_index(1, 2, 1));
    CHECK(!valid_mu_index(1, 3, 1));   // k > 2n
    CHECK(!valid_mu_index(2, 3, 0));   // q < k - n
    CHECK(!valid_mu_index(2, 2, 2));   // 2q > k

    // N_{3,1} exists for n = 2 (q = k - n is allowed); N needs q >= 1, 2q < k
    CHECK(valid_area_index(2, {3, 1, Family::N}));
    CHECK(!valid_area_index(2, {2, 1, Family::N}));  // 2q < k fails
    CHECK(!valid_area_index(2, {1, 0, Family::N}));  // q = 0
    CHECK(!valid_area_index(1, {2, 1, Family::N}));  // no N at all for n = 1
    CHECK(valid_area_index(3, {3, 1, Family::N}));
    CHECK(!valid_area_index(3, {3, 0, Family::N}));

    // top-degree Delta_{2n,n} is representable
    CHECK(valid_area_index(2, {4, 2, Family::Delta}));
    CHECK(valid_area_index(2, {4, 2, Family::B}));

    AreaElement bad;
    bad.n = 2;
    CHECK_THROWS_AS(bad.add({2, 1, Family::N}, one()), ValidationError);
}

TEST_CASE("globalization rules") {
    CHECK(glob(area1(2, 1, 0, Family::Delta, one())) == mu(2, 1, 0));
    CHECK(glob(area1(2, 3, 1, Family::N, one())).is_zero());
    // expanded B globalizes to mu
    const ValElement x = mu(2, 3, 1);
    CHECK(glob(ell_B(x)) == x);
}

TEST_CASE("ell_B expands into Delta plus N exactly when N is in range") {
    const AreaElement withN = ell_B(mu(2, 3, 1));
    CHECK(withN.terms.size() == 2);
    CHECK(withN.terms.count({3, 1, Family::Delta}) == 1);
    CHECK(withN.terms.count({3, 1, Family::N}) == 1);

    const AreaElement noN = ell_B(mu(2, 2, 1));  // N_{2,1} out of range
    CHECK(noN.terms.size() == 1);
    CHECK(noN.terms.count({2, 1, Family::Delta}) == 1);
}

TEST_CASE("glob o ell_B = id and glob o delta_N = 0 on every index, n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= 2 * n; ++k)
            for (int q = 0; q <= n; ++q) {
                if (!valid_mu_index(n, k, q)) continue;
                const ValElement x = mu(n, k, q);
                CHECK(glob(ell_B(x)) == x);
                CHECK(glob(delta_N(x)).is_zero());
            }
}

TEST_CASE("delta_B pinned values") {
    CHECK(delta_B(mu(1, 0, 0)).is_zero());
    CHECK(delta_A(mu(1, 0, 0)).is_zero());

    const AreaElement d1 = delta_B(mu(1, 1, 0));
    CHECK(d1.terms.size() == 1);
    CHECK(d1.terms.at({0, 0, Family::Delta}) == LambdaPiPoly(PiPoly::monomial(1, 2)));

    const AreaElement d2 = delta_B(mu(2, 2, 0));
    CHECK(d2.terms.size() == 1);
    CHECK(d2.terms.at({1, 0, Family::Delta}) ==
          LambdaPiPoly(PiPoly::constant(Rational(8) / Rational(3))));
}

TEST_CASE("delta_N drop rules and pinned values") {
    CHECK(delta_N(mu(1, 2, 1)).is_zero());  // target N_{1,0} out of range
    CHECK(delta_N(mu(2, 2, 0)).is_zero());  // nonzero printed coefficient on N_{1,0}, dropped

    // n = 3: first term lands on N_{3,1}, second (N_{3,0}) is dropped
    const AreaElement d = delta_N(mu(3, 4, 1));
    CHECK(d.terms.size() == 1);
    const PiPoly expected = c_coeff(3, 4, 1) *
                            PiPoly::constant(Rational(4 * (2 * 3 - 4 + 1)) / Rational(3 - 4 + 1 + 1)) *
                            c_coeff(3, 3, 1).inverse();
    CHECK(d.terms.at({3, 1, Family::N}) == LambdaPiPoly(expected));

    // n = 2: delta_N(mu_{4,2}) = -2 N_{3,1} (hand evaluation of the formula)
    const AreaElement top = delta_N(mu(2, 4, 2));
    CHECK(top.terms.size() == 1);
    CHECK(top.terms.at({3, 1, Family::N}) == LambdaPiPoly(PiPoly::constant(-2)));
}

TEST_CASE("delta_A globalizes like delta_B alone, n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= 2 * n; ++k)
            for (int q = 0; q <= n; ++q) {
                if (!valid_mu_index(n, k, q)) continue;
                const ValElement x = mu(n, k, q);
                CHECK(glob(delta_A(x)) == glob(delta_B(x)));
            }
}

TEST_CASE("delta maps lower the degree by exactly one") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= 2 * n; ++k)
            for (int q = 0; q <= n; ++q) {
                if (!valid_mu_index(n, k, q)) continue;
                for (const auto& [idx, c] : delta_A(mu(n, k, q)).terms) CHECK(idx.k == k - 1);
            }
}

TEST_CASE("basis changes invert each other") {
    SplitMix64 rng(10);
    for (int n = 1; n <= 4; ++n) {
        for (int it = 0; it < 20; ++it) {
            AreaElement x;
            x.n = n;
            for (int k = 0; k <= 2 * n; ++k)
                for (int q = 0; q <= n; ++q) {
                    const BasisIndex d{k, q, Family::Delta};
                    if (valid_area_index(n, d) && rng.next() % 2)
                        x.add(d, hermitian_gen::random_coeff(rng));
                    const BasisIndex nn{k, q, Family::N};
                    if (valid_area_index(n, nn) && rng.next() % 2)
                        x.add(nn, hermitian_gen::random_coeff(rng));
                }
            CHECK(from_B_basis(to_B_basis(x)) == x);
        }
    }
    // and the B example of the definition
    const AreaElement b31 = to_B_basis(area1(2, 3, 1, Family::Delta, one()));
    CHECK(b31.terms.at({3, 1, Family::B}) == one());
    CHECK(b31.terms.at({3, 1, Family::N}) == -one());
}

TEST_CASE("g_lambda rules, flags, and the lambda = 0 collapse") {
    // B_{2,1} -> mu_{2,1} - (2 lambda / pi) mu_{4,2}   (n = 2)
    const GLambdaResult r = g_lambda(area1(2, 2, 1, Family::B, one()));
    CHECK(r.flagged.empty());
    CHECK(r.value.terms.size() == 2);
    CHECK(r.value.terms.at({2, 1, Family::Mu}) == one());
    CHECK(r.value.terms.at({4, 2, Family::Mu}) == LambdaPiPoly::monomial(-2, 1, -2));

    // N_{3,1} at n = 2 maps outside the valuation range -> flagged
    const GLambdaResult flagged = g_lambda(area1(2, 3, 1, Family::N, one()));
    CHECK(flagged.value.is_zero());
    REQUIRE(flagged.flagged.size() == 1);
    CHECK(flagged.flagged[0].targetK == 5);
    CHECK(flagged.flagged[0].targetQ == 2);

    // same symbol at n = 3 is in range
    const GLambdaResult fine = g_lambda(area1(3, 3, 1, Family::N, one()));
    CHECK(fine.flagged.empty());
    CHECK(fine.value.terms.at({5, 2, Family::Mu}) == LambdaPiPoly::monomial(-2, 1, -2));

    // lambda = 0 slice equals glob, for every basis element, n <= 4
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= 2 * n; ++k)
            for (int q = 0; q <= n; ++q)
                for (Family f : {Family::Delta, Family::N}) {
                    const BasisIndex idx{k, q, f};
                    if (!valid_area_index(n, idx)) continue;
                    const AreaElement x = area1(n, k, q, f, one());
                    const GLambdaResult g = g_lambda(x);
                    ValElement zeroSlice;
                    zeroSlice.n = n;
                    for (const auto& [i, c] : g.value.terms)
                        zeroSlice.add(i, LambdaPiPoly(c.at_lambda_zero()));
                    CHECK(zeroSlice == glob(x));
                }
}

TEST_CASE("compute_AS on the n = 1 principal tensor") {
    // a (mu00 x mu21 + mu21 x mu00) + b mu10 x mu10
    //   -> 2a B10 x B00 + pi b B00 x B10
    const Rational a(3), b(5);
    KinTensor kchi;
    kchi.n = 1;
    kchi.add({0, 0, Family::Mu}, {2, 1, Family::Mu}, LambdaPiPoly(PiPoly::constant(a)));
    kchi.add({2, 1, Family::Mu}, {0, 0, Family::Mu}, LambdaPiPoly(PiPoly::constant(a)));
    kchi.add({1, 0, Family::Mu}, {1, 0, Family::Mu}, LambdaPiPoly(PiPoly::constant(b)));

    const KinTensor AS = compute_AS(kchi);
    CHECK(AS.slot1 == KinTensor::Slot::Area);
    CHECK(AS.terms.size() == 2);
    CHECK(AS.terms.at({{1, 0, Family::Delta}, {0, 0, Family::Delta}}) ==
          LambdaPiPoly(PiPoly::constant(a * Rational(2))));
    CHECK(AS.terms.at({{0, 0, Family::Delta}, {1, 0, Family::Delta}}) ==
          LambdaPiPoly(PiPoly::monomial(b, 2)));

    CHECK(compute_AS(KinTensor{1, KinTensor::Slot::Val, KinTensor::Slot::Val, {}}).is_zero());

    KinTensor unpaired;
    unpaired.n = 2;
    unpaired.add({1, 0, Family::Mu}, {1, 0, Family::Mu}, one());
    CHECK_THROWS_AS(compute_AS(unpaired), ValidationError);
}

TEST_CASE("symmetry and noNN checks") {
    KinTensor T;
    T.n = 2;
    T.slot1 = T.slot2 = KinTensor::Slot::Area;
    T.add({3, 1, Family::N}, {0, 0, Family::Delta}, one());
    const SymmetryReport broken = check_symmetric(T);
    CHECK(!broken.symmetric);
    CHECK(!broken.offenders.empty());  // the asymmetry is located, not just flagged
    T.add({0, 0, Family::Delta}, {3, 1, Family::N}, one());
    CHECK(check_symmetric(T).symmetric);

    KinTensor zero;
    zero.slot1 = zero.slot2 = KinTensor::Slot::Area;
    CHECK(check_symmetric(zero).symmetric);
    CHECK(check_noNN(zero));

    KinTensor nn;
    nn.n = 2;
    nn.slot1 = nn.slot2 = KinTensor::Slot::Area;
    nn.add({3, 1, Family::N}, {3, 1, Family::N}, one());
    CHECK(!check_noNN(nn));

    KinTensor bn;
    bn.n = 2;
    bn.slot1 = bn.slot2 = KinTensor::Slot::Area;
    bn.add({3, 1, Family::B}, {3, 1, Family::N}, one());
    CHECK(check_noNN(bn));

    // Delta x Delta hides a N x N component: Delta = B - N
    KinTensor dd;
    dd.n = 2;
    dd.slot1 = dd.slot2 = KinTensor::Slot::Area;
    dd.add({3, 1, Family::Delta}, {3, 1, Family::Delta}, one());
    CHECK(!check_noNN(dd));
}

TEST_CASE("builtin n = 1 tensor and its symmetry condition") {
    const KinTensor unit = builtin_kchi_n1(1, 1, 1);
    CHECK(unit.terms.at({{1, 0, Family::Mu}, {1, 0, Family::Mu}}) ==
          LambdaPiPoly(PiPoly::monomial(2, -2)));
    CHECK(unit.terms.at({{0, 0, Family::Mu}, {2, 1, Family::Mu}}) == one());

    // symmetric output iff a1^2 = a0 a2
    CHECK(check_symmetric(compute_AS(builtin_kchi_n1(2, 2, 2))).symmetric);
    CHECK(check_symmetric(compute_AS(builtin_kchi_n1(1, 4, 16))).symmetric);
    CHECK(!check_symmetric(compute_AS(builtin_kchi_n1(1, 2, 1))).symmetric);
    CHECK_THROWS_AS(builtin_kchi_n1(0, 1, 1), ValidationError);
}

TEST_CASE("calibration pins the scale family a0 = a1 = a2") {
    const CalibrationReport rep = calibrate_n1();
    CHECK(rep.consistent);
    CHECK(rep.scalar_family);
    CHECK(rep.ratio01 == PiPoly::constant(1));
    CHECK(rep.ratio12 == PiPoly::constant(1));
    CHECK(rep.calibratedAS.terms.size() == 2);
    CHECK(rep.calibratedAS.terms.at({{1, 0, Family::Delta}, {0, 0, Family::Delta}}) ==
          LambdaPiPoly(PiPoly::constant(2)));
    CHECK(check_symmetric(rep.calibratedAS).symmetric);
}

TEST_CASE("top-degree area symbols never appear in additive tensors") {
    // Delta_{2n,n} is representable but must not survive the construction:
    // its ell_B image only ever pairs with delta_N(mu_{0,0}) = 0
    for (int n = 1; n <= 4; ++n) {
        KinTensor kchi;
        kchi.n = n;
        kchi.add({0, 0, Family::Mu}, {2 * n, n, Family::Mu}, one());
        kchi.add({2 * n, n, Family::Mu}, {0, 0, Family::Mu}, one());
        const KinTensor AS = compute_AS(kchi);
        for (const auto& [key, c] : AS.terms) {
            CHECK(!(key.first.k == 2 * n && key.first.q == n));
            CHECK(!(key.second.k == 2 * n && key.second.q == n));
        }
        CHECK(!AS.is_zero());  // the delta_A x ell_B side does contribute
    }
}

TEST_CASE("structural identity (id x glob) o compute_AS = delta_A x id") {
    SplitMix64 rng(8080);
    for (int n = 1; n <= 4; ++n) {
        for (int it = 0; it < 25; ++it) {
            const KinTensor T = hermitian_gen::random_degree_paired(rng, n);
            const KinTensor AS = compute_AS(T);
            CHECK(apply_glob_second(AS) == apply_deltaA_first(T));
            CHECK(check_noNN(AS));
        }
    }
}
