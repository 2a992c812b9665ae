#pragma once

#include <string>
#include <vector>

#include "kinemetry/common.hpp"
#include "kinemetry/pipoly.hpp"

namespace kinemetry {

// Basis families of the unitary valuation / area-measure algebra:
//   Mu    - Hermitian intrinsic volumes mu_{k,q} (valuations)
//   Delta - area measures globalizing to mu_{k,q}
//   N     - area measures globalizing to zero
//   B     - Delta + N (Delta alone where N is out of range)
enum class Family { Mu, Delta, N, B };

struct BasisIndex {
    int k = 0;
    int q = 0;
    Family family = Family::Mu;

    friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

std::string to_string(const BasisIndex& idx);

// mu_{k,q}: 0 <= k <= 2n, max(0, k-n) <= q, 2q <= k, q <= n.
bool valid_mu_index(int n, int k, int q);
// Delta/B share the mu range; N needs q >= max(1, k-n) and 2q < k.
bool valid_area_index(int n, const BasisIndex& idx);

// Sparse exact linear combination over mu indices.
struct ValElement {
    int n = 1;
    std::map<BasisIndex, LambdaPiPoly> terms;

    void add(const BasisIndex& idx, const LambdaPiPoly& coeff);
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const ValElement&, const ValElement&) = default;
};

// Sparse exact linear combination over Delta/N (or B/N) indices.
struct AreaElement {
    int n = 1;
    std::map<BasisIndex, LambdaPiPoly> terms;

    void add(const BasisIndex& idx, const LambdaPiPoly& coeff);
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const AreaElement&, const AreaElement&) = default;
};

// Globalization: Delta_{k,q} (and B_{k,q}) -> mu_{k,q}, N -> 0.
ValElement glob(const AreaElement& x);

// Section of glob: mu_{k,q} -> B_{k,q}, expanded into Delta (+ N when valid).
AreaElement ell_B(const ValElement& x);

// First-variation components; both lower the degree k by one.  Terms with an
// explicit zero factor (k = 2q or q = 0) are skipped before their
// c-denominators are formed; delta_N targets outside the N range denote the
// zero measure and are dropped.
AreaElement delta_B(const ValElement& x);
AreaElement delta_N(const ValElement& x);
AreaElement delta_A(const ValElement& x);

// Basis changes (Delta,N) <-> (B,N); exact inverses of each other.
AreaElement to_B_basis(const AreaElement& x);
AreaElement from_B_basis(const AreaElement& x);

struct GLambdaFlag {
    BasisIndex source;
    int targetK = 0;
    int targetQ = 0;
    LambdaPiPoly coeff;
};

struct GLambdaResult {
    int n = 1;
    ValElement value;
    std::vector<GLambdaFlag> flagged;  // nonzero images landing outside the mu range
};

// The curvature-deformation evaluation map:
//   N_{k,q}   ->  -lambda (q+1)/pi mu_{k+2,q+1}
//   B_{k,q}   ->  mu_{k,q}                      (k != 2q)
//   B_{2q,q}  ->  mu_{2q,q} - lambda (q+1)/pi mu_{2q+2,q+1}
// Accepts (Delta,N) input and converts to (B,N) first.
GLambdaResult g_lambda(const AreaElement& x);

// Sparse exact bilinear tensor over basis-index pairs.
struct KinTensor {
    enum class Slot { Val, Area };

    int n = 1;
    Slot slot1 = Slot::Val;
    Slot slot2 = Slot::Val;
    std::map<std::pair<BasisIndex, BasisIndex>, LambdaPiPoly> terms;

    void add(const BasisIndex& i, const BasisIndex& j, const LambdaPiPoly& coeff);
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const KinTensor&, const KinTensor&) = default;
};

// The additive kinematic tensor from a degree-paired principal tensor:
// (delta_A (x) ell_B + ell_B (x) delta_N) applied termwise, with delta_N
// evaluated first so vanishing images suppress their ell_B partners.
KinTensor compute_AS(const KinTensor& kchi);

struct SymmetryReport {
    bool symmetric = true;
    std::vector<std::pair<BasisIndex, BasisIndex>> offenders;
};

SymmetryReport check_symmetric(const KinTensor& T);

// True iff the (B,N)-basis expansion of T has no N (x) N component.
bool check_noNN(const KinTensor& T);

// (id (x) glob) and (delta_A (x) id); used by the structural identity checks.
KinTensor apply_glob_second(const KinTensor& areaTensor);
KinTensor apply_deltaA_first(const KinTensor& valTensor);

// Principal kinematic tensor of the plane in the mu_{k,q} basis with unknown
// scales mu_{k,q} = a_k mu_k:
//   (1/(a0 a2)) (mu00 (x) mu21 + mu21 (x) mu00) + (2/(pi a1^2)) mu10 (x) mu10.
KinTensor builtin_kchi_n1(const Rational& a0, const Rational& a1, const Rational& a2);

struct CalibrationReport {
    bool consistent = false;
    bool scalar_family = false;  // solution set is exactly {a0 = a1 = a2 > 0}
    PiPoly ratio01;              // forced a0/a1
    PiPoly ratio12;              // forced a1/a2
    KinTensor calibratedAS;      // compute_AS of the builtin tensor at a = 1
    std::string message;
};

// Solves the scale identification against the classical plane tensor
// (1/2pi)(sigma (x) S_1 + S_1 (x) sigma).
CalibrationReport calibrate_n1();

}  // namespace kinemetry
