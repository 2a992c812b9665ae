#include "kinemetry/hermitian.hpp"

#include <stdexcept>

#include "kinemetry/common.hpp"

namespace kinemetry {

std::string to_string(const BasisIndex& idx) {
    const char* fam = idx.family == Family::Mu      ? "mu"
                      : idx.family == Family::Delta ? "Delta"
                      : idx.family == Family::N     ? "N"
                                                    : "B";
    return std::string(fam) + "_{" + std::to_string(idx.k) + "," + std::to_string(idx.q) + "}";
}

bool valid_mu_index(int n, int k, int q) {
    return n >= 1 && k >= 0 && k <= 2 * n && q >= 0 && q >= k - n && 2 * q <= k && q <= n;
}

bool valid_area_index(int n, const BasisIndex& idx) {
    switch (idx.family) {
        case Family::Delta:
        case Family::B:
            return valid_mu_index(n, idx.k, idx.q);
        case Family::N:
            return n >= 1 && idx.k <= 2 * n && idx.q >= 1 && idx.q >= idx.k - n &&
                   2 * idx.q < idx.k;
        case Family::Mu:
            return false;
    }
    return false;
}

void ValElement::add(const BasisIndex& idx, const LambdaPiPoly& coeff) {
    if (coeff.is_zero()) return;
    if (idx.family != Family::Mu || !valid_mu_index(n, idx.k, idx.q))
        throw ValidationError("invalid mu index " + to_string(idx) + " for n=" + std::to_string(n));
    auto [it, inserted] = terms.try_emplace(idx, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms.erase(it);
    }
}

void AreaElement::add(const BasisIndex& idx, const LambdaPiPoly& coeff) {
    if (coeff.is_zero()) return;
    if (idx.family == Family::Mu || !valid_area_index(n, idx))
        throw ValidationError("invalid area index " + to_string(idx) +
                              " for n=" + std::to_string(n));
    auto [it, inserted] = terms.try_emplace(idx, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms.erase(it);
    }
}

ValElement glob(const AreaElement& x) {
    ValElement out;
    out.n = x.n;
    for (const auto& [idx, c] : x.terms) {
        if (idx.family == Family::N) continue;
        out.add({idx.k, idx.q, Family::Mu}, c);
    }
    return out;
}

namespace {

// B_{k,q} expanded into the (Delta, N) basis.
void add_B_expanded(AreaElement& out, int k, int q, const LambdaPiPoly& coeff) {
    const BasisIndex delta{k, q, Family::Delta};
    if (!valid_area_index(out.n, delta))
        throw std::logic_error("emitted B symbol outside the Delta range: " + to_string(delta));
    out.add(delta, coeff);
    const BasisIndex nIdx{k, q, Family::N};
    if (valid_area_index(out.n, nIdx)) out.add(nIdx, coeff);
}

LambdaPiPoly times_pi_poly(const LambdaPiPoly& c, const PiPoly& p) {
    return c * LambdaPiPoly(p);
}

}  // namespace

AreaElement ell_B(const ValElement& x) {
    AreaElement out;
    out.n = x.n;
    for (const auto& [idx, c] : x.terms) add_B_expanded(out, idx.k, idx.q, c);
    return out;
}

AreaElement delta_B(const ValElement& x) {
    AreaElement out;
    out.n = x.n;
    const int n = x.n;
    for (const auto& [idx, c] : x.terms) {
        const int k = idx.k, q = idx.q;
        const PiPoly cnkq = c_coeff(n, k, q);
        if (k - 2 * q > 0) {
            const PiPoly factor =
                cnkq * PiPoly::constant(Rational(2 * (k - 2 * q))) * c_coeff(n, k - 1, q).inverse();
            add_B_expanded(out, k - 1, q, times_pi_poly(c, factor));
        }
        if (q > 0) {
            const PiPoly factor =
                cnkq * PiPoly::constant(Rational(q)) * c_coeff(n, k - 1, q - 1).inverse();
            add_B_expanded(out, k - 1, q - 1, times_pi_poly(c, factor));
        }
    }
    return out;
}

AreaElement delta_N(const ValElement& x) {
    AreaElement out;
    out.n = x.n;
    const int n = x.n;
    for (const auto& [idx, c] : x.terms) {
        const int k = idx.k, q = idx.q;
        const PiPoly cnkq = c_coeff(n, k, q);
        if (k - 2 * q > 0) {
            const BasisIndex target{k - 1, q, Family::N};
            if (valid_area_index(n, target)) {
                const Rational num(static_cast<long long>(k - 2 * q) * (k - 2 * q) *
                                   (2 * n - k + 1));
                const PiPoly factor = cnkq * PiPoly::constant(num / Rational(n - k + q + 1)) *
                                      c_coeff(n, k - 1, q).inverse();
                out.add(target, times_pi_poly(c, factor));
            }
        }
        if (q > 0) {
            const BasisIndex target{k - 1, q - 1, Family::N};
            if (valid_area_index(n, target)) {
                const PiPoly factor = cnkq *
                                      PiPoly::constant(-Rational(q * (2 * n - k + 1))) *
                                      c_coeff(n, k - 1, q - 1).inverse();
                out.add(target, times_pi_poly(c, factor));
            }
        }
    }
    return out;
}

AreaElement delta_A(const ValElement& x) {
    AreaElement out = delta_B(x);
    for (const auto& [idx, c] : delta_N(x).terms) out.add(idx, c);
    return out;
}

AreaElement to_B_basis(const AreaElement& x) {
    AreaElement out;
    out.n = x.n;
    for (const auto& [idx, c] : x.terms) {
        if (idx.family == Family::B) throw ValidationError("element is already in the (B,N) basis");
        if (idx.family == Family::N) {
            out.add(idx, c);
            continue;
        }
        out.add({idx.k, idx.q, Family::B}, c);
        const BasisIndex nIdx{idx.k, idx.q, Family::N};
        if (valid_area_index(x.n, nIdx)) out.add(nIdx, -c);
    }
    return out;
}

AreaElement from_B_basis(const AreaElement& x) {
    AreaElement out;
    out.n = x.n;
    for (const auto& [idx, c] : x.terms) {
        if (idx.family == Family::Delta)
            throw ValidationError("element is already in the (Delta,N) basis");
        if (idx.family == Family::N) {
            out.add(idx, c);
            continue;
        }
        add_B_expanded(out, idx.k, idx.q, c);
    }
    return out;
}

GLambdaResult g_lambda(const AreaElement& x) {
    bool hasDelta = false;
    for (const auto& [idx, c] : x.terms) hasDelta |= idx.family == Family::Delta;
    const AreaElement bn = hasDelta ? to_B_basis(x) : x;

    GLambdaResult res;
    res.n = x.n;
    res.value.n = x.n;
    auto lambda_image = [&](const BasisIndex& src, const LambdaPiPoly& c) {
        // -lambda (q+1)/pi mu_{k+2, q+1}
        const LambdaPiPoly factor = LambdaPiPoly::monomial(-Rational(src.q + 1), 1, -2);
        const LambdaPiPoly coeff = c * factor;
        if (valid_mu_index(x.n, src.k + 2, src.q + 1)) {
            res.value.add({src.k + 2, src.q + 1, Family::Mu}, coeff);
        } else {
            res.flagged.push_back({src, src.k + 2, src.q + 1, coeff});
        }
    };

    for (const auto& [idx, c] : bn.terms) {
        if (idx.family == Family::N) {
            lambda_image(idx, c);
        } else {  // B
            res.value.add({idx.k, idx.q, Family::Mu}, c);
            if (idx.k == 2 * idx.q) lambda_image(idx, c);
        }
    }
    return res;
}

void KinTensor::add(const BasisIndex& i, const BasisIndex& j, const LambdaPiPoly& coeff) {
    if (coeff.is_zero()) return;
    auto check = [&](Slot slot, const BasisIndex& idx) {
        if (slot == Slot::Val) {
            if (idx.family != Family::Mu || !valid_mu_index(n, idx.k, idx.q))
                throw ValidationError("invalid val-slot index " + to_string(idx));
        } else {
            if (idx.family == Family::Mu || !valid_area_index(n, idx))
                throw ValidationError("invalid area-slot index " + to_string(idx));
        }
    };
    check(slot1, i);
    check(slot2, j);
    auto [it, inserted] = terms.try_emplace(std::pair{i, j}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms.erase(it);
    }
}

KinTensor compute_AS(const KinTensor& kchi) {
    if (kchi.slot1 != KinTensor::Slot::Val || kchi.slot2 != KinTensor::Slot::Val)
        throw ValidationError("compute_AS expects a Val (x) Val tensor");
    for (const auto& [key, c] : kchi.terms)
        if (key.first.k + key.second.k != 2 * kchi.n)
            throw ValidationError("tensor is not degree-paired: " + to_string(key.first) + " (x) " +
                                  to_string(key.second));

    KinTensor out;
    out.n = kchi.n;
    out.slot1 = KinTensor::Slot::Area;
    out.slot2 = KinTensor::Slot::Area;

    for (const auto& [key, c] : kchi.terms) {
        ValElement a, b;
        a.n = b.n = kchi.n;
        a.add(key.first, LambdaPiPoly(PiPoly::constant(1)));
        b.add(key.second, LambdaPiPoly(PiPoly::constant(1)));

        const AreaElement dA = delta_A(a);
        if (!dA.is_zero()) {
            const AreaElement lb = ell_B(b);
            for (const auto& [ia, ca] : dA.terms)
                for (const auto& [ib, cb] : lb.terms) out.add(ia, ib, c * ca * cb);
        }
        const AreaElement dN = delta_N(b);
        if (!dN.is_zero()) {
            const AreaElement la = ell_B(a);
            for (const auto& [ia, ca] : la.terms)
                for (const auto& [ib, cb] : dN.terms) out.add(ia, ib, c * ca * cb);
        }
    }
    return out;
}

SymmetryReport check_symmetric(const KinTensor& T) {
    SymmetryReport rep;
    if (T.slot1 != T.slot2) throw ValidationError("symmetry check needs matching slots");
    for (const auto& [key, c] : T.terms) {
        if (key.second < key.first) continue;  // report each unordered pair once
        const auto it = T.terms.find({key.second, key.first});
        const bool match = it != T.terms.end() && it->second == c;
        if (!match) rep.offenders.push_back(key);
    }
    // entries whose transpose slot is empty but that sit below the diagonal
    for (const auto& [key, c] : T.terms) {
        if (!(key.second < key.first)) continue;
        if (T.terms.find({key.second, key.first}) == T.terms.end())
            rep.offenders.push_back(key);
    }
    rep.symmetric = rep.offenders.empty();
    return rep;
}

namespace {

// Expansion of an area index into the (B, N) basis: list of (index, sign).
std::vector<std::pair<BasisIndex, int>> bn_expansion(int n, const BasisIndex& idx) {
    if (idx.family == Family::N || idx.family == Family::B) return {{idx, 1}};
    std::vector<std::pair<BasisIndex, int>> out{{{idx.k, idx.q, Family::B}, 1}};
    const BasisIndex nIdx{idx.k, idx.q, Family::N};
    if (valid_area_index(n, nIdx)) out.push_back({nIdx, -1});
    return out;
}

}  // namespace

bool check_noNN(const KinTensor& T) {
    if (T.slot1 != KinTensor::Slot::Area || T.slot2 != KinTensor::Slot::Area)
        throw ValidationError("check_noNN expects an Area (x) Area tensor");
    std::map<std::pair<BasisIndex, BasisIndex>, LambdaPiPoly> bn;
    for (const auto& [key, c] : T.terms) {
        for (const auto& [i, si] : bn_expansion(T.n, key.first)) {
            for (const auto& [j, sj] : bn_expansion(T.n, key.second)) {
                LambdaPiPoly add = si * sj > 0 ? c : -c;
                auto [it, inserted] = bn.try_emplace(std::pair{i, j}, add);
                if (!inserted) {
                    it->second += add;
                    if (it->second.is_zero()) bn.erase(it);
                }
            }
        }
    }
    for (const auto& [key, c] : bn)
        if (key.first.family == Family::N && key.second.family == Family::N) return false;
    return true;
}

KinTensor apply_glob_second(const KinTensor& areaTensor) {
    if (areaTensor.slot2 != KinTensor::Slot::Area)
        throw ValidationError("apply_glob_second expects an Area second slot");
    KinTensor out;
    out.n = areaTensor.n;
    out.slot1 = areaTensor.slot1;
    out.slot2 = KinTensor::Slot::Val;
    for (const auto& [key, c] : areaTensor.terms) {
        if (key.second.family == Family::N) continue;
        out.add(key.first, {key.second.k, key.second.q, Family::Mu}, c);
    }
    return out;
}

KinTensor apply_deltaA_first(const KinTensor& valTensor) {
    if (valTensor.slot1 != KinTensor::Slot::Val)
        throw ValidationError("apply_deltaA_first expects a Val first slot");
    KinTensor out;
    out.n = valTensor.n;
    out.slot1 = KinTensor::Slot::Area;
    out.slot2 = valTensor.slot2;
    for (const auto& [key, c] : valTensor.terms) {
        ValElement a;
        a.n = valTensor.n;
        a.add(key.first, LambdaPiPoly(PiPoly::constant(1)));
        for (const auto& [ia, ca] : delta_A(a).terms) out.add(ia, key.second, c * ca);
    }
    return out;
}

KinTensor builtin_kchi_n1(const Rational& a0, const Rational& a1, const Rational& a2) {
    if (a0.sign() <= 0 || a1.sign() <= 0 || a2.sign() <= 0)
        throw ValidationError("builtin_kchi_n1: scales must be positive");
    KinTensor T;
    T.n = 1;
    const BasisIndex mu00{0, 0, Family::Mu}, mu10{1, 0, Family::Mu}, mu21{2, 1, Family::Mu};
    const LambdaPiPoly cross(PiPoly::constant(Rational(1) / (a0 * a2)));
    T.add(mu00, mu21, cross);
    T.add(mu21, mu00, cross);
    T.add(mu10, mu10, LambdaPiPoly(PiPoly::monomial(Rational(2) / (a1 * a1), -2)));
    return T;
}

CalibrationReport calibrate_n1() {
    CalibrationReport rep;

    // The two independent pieces of the builtin tensor, pushed through the
    // additive construction with unit coefficients.
    KinTensor crossPart, diagPart;
    crossPart.n = diagPart.n = 1;
    const BasisIndex mu00{0, 0, Family::Mu}, mu10{1, 0, Family::Mu}, mu21{2, 1, Family::Mu};
    const LambdaPiPoly one(PiPoly::constant(1));
    crossPart.add(mu00, mu21, one);
    crossPart.add(mu21, mu00, one);
    diagPart.add(mu10, mu10, one);

    const KinTensor TA = compute_AS(crossPart);
    const KinTensor TB = compute_AS(diagPart);

    const BasisIndex d00{0, 0, Family::Delta}, d10{1, 0, Family::Delta};

    const auto exactly_one = [](const KinTensor& T, const BasisIndex& i, const BasisIndex& j,
                                PiPoly& coeff) {
        if (T.terms.size() != 1) return false;
        const auto it = T.terms.find({i, j});
        if (it == T.terms.end() || it->second.max_lambda_degree() != 0) return false;
        coeff = it->second.at_lambda_zero();
        return coeff.is_monomial();
    };

    PiPoly cA, cB;
    if (!exactly_one(TA, d10, d00, cA) || !exactly_one(TB, d00, d10, cB)) {
        rep.message = "additive images have unexpected support; calibration impossible";
        return rep;
    }

    // Classical identification Delta00 = (a0/2pi) sigma, Delta10 = (a1/2) S1
    // (forced by globalization).  Matching against (1/2pi)(sigma (x) S1 +
    // S1 (x) sigma) pins the scale ratios:
    //   S1 (x) sigma entry: cA a1 a0 / (4pi a0 a2) = 1/(2pi)  =>  a1/a2 = 2/cA
    //   sigma (x) S1 entry: cB a0 / (2pi^2 a1)     = 1/(2pi)  =>  a0/a1 = pi/cB
    rep.ratio12 = PiPoly::constant(2) * cA.inverse();
    rep.ratio01 = PiPoly::monomial(1, 2) * cB.inverse();

    // Symmetry of the computed tensor demands a1^2 = a0 a2, i.e. equal ratios.
    rep.consistent = rep.ratio01 == rep.ratio12;
    rep.scalar_family = rep.consistent && rep.ratio01 == PiPoly::constant(1);

    rep.calibratedAS = compute_AS(builtin_kchi_n1(1, 1, 1));
    rep.message = rep.scalar_family
                      ? "solution set: a0 = a1 = a2 (free positive scale)"
                      : (rep.consistent ? "solution set is a non-unit scale family"
                                        : "matching equations are inconsistent");
    return rep;
}

}  // namespace kinemetry
