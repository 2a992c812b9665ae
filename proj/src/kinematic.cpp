#include "kinemetry/kinematic.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <vector>

#include "kinemetry/intrinsic.hpp"

namespace kinemetry {

int worker_count() {
    if (const char* env = std::getenv("KINEMETRY_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<int>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

// Chunked deterministic runner: the chunk schedule is a pure function of the
// sample count, each chunk draws from its own SplitMix64 stream, and partial
// counts are integers, so totals are identical for any worker count.
template <class Fn>
std::uint64_t run_chunked(std::uint64_t samples, std::uint64_t seed, Fn&& fn) {
    const std::uint64_t nChunks = (samples + kChunkSamples - 1) / kChunkSamples;
    std::vector<std::uint64_t> partial(nChunks, 0);
    std::atomic<std::uint64_t> nextChunk{0};

    auto work = [&]() {
        for (;;) {
            const std::uint64_t c = nextChunk.fetch_add(1);
            if (c >= nChunks) break;
            SplitMix64 rng(chunk_seed(seed, c));
            const std::uint64_t count = std::min(kChunkSamples, samples - c * kChunkSamples);
            std::uint64_t acc = 0;
            for (std::uint64_t i = 0; i < count; ++i) acc += fn(rng);
            partial[c] = acc;
        }
    };

    const int nw = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(worker_count()), std::max<std::uint64_t>(nChunks, 1)));
    std::vector<std::thread> pool;
    for (int i = 1; i < nw; ++i) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    std::uint64_t total = 0;
    for (std::uint64_t p : partial) total += p;
    return total;
}

McEstimate indicator_estimate(std::uint64_t hits, std::uint64_t samples, double volume,
                              std::uint64_t seed) {
    McEstimate e;
    e.samples = samples;
    e.seed = seed;
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    e.value = volume * p;
    if (samples > 1)
        e.stdError = volume * std::sqrt(p * (1.0 - p) / static_cast<double>(samples - 1));
    return e;
}

double binom(int n, int i) {
    double b = 1;
    for (int j = 0; j < i; ++j) b = b * (n - j) / (j + 1);
    return b;
}

ConvexBody rotated_2d(const ConvexBody& body, double phi) {
    const RigidMotion2 g = rotation2(phi);
    return std::visit(
        [&](const auto& b) -> ConvexBody {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Polygon> || std::is_same_v<T, SupportBody2> ||
                          std::is_same_v<T, Ball2>)
                return transformed(b, g);
            else
                throw ValidationError("2D rotation applied to a 3D body");
        },
        body);
}

std::vector<Arc> rotate_arcs(const std::vector<Arc>& arcs, double phi) {
    std::vector<Arc> out;
    out.reserve(arcs.size() + 1);
    for (const Arc& a : arcs) {
        const double len = a.hi - a.lo;
        const double lo = wrap_angle(a.lo + phi);
        const double hi = lo + len;
        if (hi > kTwoPi) {
            out.push_back({lo, kTwoPi});
            out.push_back({0.0, hi - kTwoPi});
        } else {
            out.push_back({lo, hi});
        }
    }
    return out;
}

}  // namespace

double pkf_rhs(const ConvexBody& A, const ConvexBody& B) {
    const int n = dimension(A);
    if (n != dimension(B)) throw ValidationError("pkf_rhs: dimension mismatch");
    const IntrinsicVolumes muA = intrinsic_volumes(A);
    const IntrinsicVolumes muB = intrinsic_volumes(B);
    double s = 0;
    for (int i = 0; i <= n; ++i)
        s += unit_ball_volume(i) * unit_ball_volume(n - i) / binom(n, i) * muA[i] * muB[n - i];
    return s / unit_ball_volume(n);
}

McEstimate estimate_pkf(const ConvexBody& A, const ConvexBody& B, const TranslationWindow& window,
                        std::uint64_t samples, std::uint64_t seed) {
    if (samples < 1) throw ValidationError("estimate_pkf: samples must be >= 1");
    const int n = dimension(A);
    if (n != dimension(B)) throw ValidationError("estimate_pkf: dimension mismatch");
    validate_window(window, A, B);

    std::uint64_t hits;
    if (n == 2) {
        hits = run_chunked(samples, seed, [&](SplitMix64& rng) -> std::uint64_t {
            const Mat2 R = sample_rotation2(rng);
            const Vec2 t = sample_in_window2(window, rng);
            return closest_gap2(A, B, R, t).gap <= kContactTol ? 1u : 0u;
        });
    } else {
        hits = run_chunked(samples, seed, [&](SplitMix64& rng) -> std::uint64_t {
            const Mat3 R = sample_rotation3(rng);
            const Vec3 t = sample_in_window3(window, rng);
            return closest_gap(A, B, R, t).gap <= kContactTol ? 1u : 0u;
        });
    }
    return indicator_estimate(hits, samples, window.volume(), seed);
}

double minkowski_area_2d(const ConvexBody& K, const ConvexBody& L) {
    if (dimension(K) != 2 || dimension(L) != 2)
        throw ValidationError("minkowski_area_2d expects 2D bodies");

    // a ball on either side: Steiner formula on the other body
    if (const Ball2* ball = std::get_if<Ball2>(&K)) {
        if (std::get_if<Ball2>(&L)) {
            const double r = ball->radius + std::get<Ball2>(L).radius;
            return kPi * r * r;
        }
        return minkowski_area_2d(L, K);
    }
    if (const Ball2* ball = std::get_if<Ball2>(&L)) {
        const IntrinsicVolumes mu = intrinsic_volumes(K);
        return mu[2] + 2.0 * mu[1] * ball->radius + kPi * ball->radius * ball->radius;
    }

    if (const Polygon* pk = std::get_if<Polygon>(&K)) {
        if (const Polygon* pl = std::get_if<Polygon>(&L))
            return polygon_area(minkowski_sum(*pk, *pl));
        // polygon + support body: area(K) + area(L) + sum of edge supports
        const SupportBody2& sb = std::get<SupportBody2>(L);
        double mixed2 = 0;
        const auto& v = pk->vertices;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Vec2& a = v[i];
            const Vec2& b = v[(i + 1) % v.size()];
            const Vec2 e = b - a;
            mixed2 += e.norm() * sb.h(std::atan2(-e.x(), e.y()));
        }
        return polygon_area(*pk) + support_body_area(sb) + mixed2;
    }
    if (std::get_if<Polygon>(&L)) return minkowski_area_2d(L, K);

    // support body + support body: support functions add
    const SupportBody2& ka = std::get<SupportBody2>(K);
    const SupportBody2& kb = std::get<SupportBody2>(L);
    SupportBody2 sum;
    sum.a0 = ka.a0 + kb.a0;
    const std::size_t deg = static_cast<std::size_t>(std::max(ka.degree(), kb.degree()));
    sum.cosCoeffs.assign(deg, 0.0);
    sum.sinCoeffs.assign(deg, 0.0);
    for (std::size_t m = 1; m <= deg; ++m) {
        if (m <= ka.cosCoeffs.size()) sum.cosCoeffs[m - 1] += ka.cosCoeffs[m - 1];
        if (m <= kb.cosCoeffs.size()) sum.cosCoeffs[m - 1] += kb.cosCoeffs[m - 1];
        if (m <= ka.sinCoeffs.size()) sum.sinCoeffs[m - 1] += ka.sinCoeffs[m - 1];
        if (m <= kb.sinCoeffs.size()) sum.sinCoeffs[m - 1] += kb.sinCoeffs[m - 1];
    }
    return support_body_area(sum);
}

double additive_global(const ConvexBody& K, const ConvexBody& L, int quadratureNodes) {
    const int n = dimension(K);
    if (n != dimension(L)) throw ValidationError("additive_global: dimension mismatch");

    if (n == 3) {
        // the integrand is rotation-invariant only when a ball is involved
        const Ball3* ball = std::get_if<Ball3>(&L);
        const ConvexBody* other = &K;
        if (!ball) {
            ball = std::get_if<Ball3>(&K);
            other = &L;
        }
        if (!ball)
            throw UnsupportedError("3D additive formula implemented only with a ball on one side");
        const IntrinsicVolumes mu = intrinsic_volumes(*other);
        double s = 0;
        for (int i = 0; i <= 3; ++i)
            s += mu[i] * unit_ball_volume(3 - i) * std::pow(ball->radius, 3 - i);
        return s;
    }

    if (quadratureNodes < 1) throw ValidationError("additive_global: need at least one node");
    double s = 0;
    for (int j = 0; j < quadratureNodes; ++j) {
        const double phi = kTwoPi * (j + 0.5) / quadratureNodes;
        s += minkowski_area_2d(K, rotated_2d(L, phi));
    }
    return s / quadratureNodes;
}

double local_additive_2d(const ConvexBody& K, const SphereRegion& U, const ConvexBody& L,
                         const SphereRegion& V, int quadratureNodes) {
    if (dimension(K) != 2 || dimension(L) != 2)
        throw ValidationError("local_additive_2d expects 2D bodies");
    if (quadratureNodes < 1) throw ValidationError("local_additive_2d: need at least one node");

    const std::vector<Arc> uArcs = as_arcs(U);
    const std::vector<Arc> vArcs = as_arcs(V);

    double s = 0;
    for (int j = 0; j < quadratureNodes; ++j) {
        const double phi = kTwoPi * (j + 0.5) / quadratureNodes;
        // S_1(K + R L, W) = S_1(K, W) + S_1(L, R^-1 W) with W = U cap R V
        const std::vector<Arc> w = intersect_arcs(uArcs, rotate_arcs(vArcs, phi));
        if (w.empty()) continue;
        s += surface_measure_arcs(K, w) + surface_measure_arcs(L, rotate_arcs(w, -phi));
    }
    return s / quadratureNodes;
}

double local_additive_oracle_2d(const ConvexBody& K, const SphereRegion& U, const ConvexBody& L,
                                const SphereRegion& V) {
    if (dimension(K) != 2 || dimension(L) != 2)
        throw ValidationError("local_additive_oracle_2d expects 2D bodies");
    const double lenU = U.circle_measure();
    const double lenV = V.circle_measure();
    const double s1K = surface_measure_arcs(K, as_arcs(U));
    const double s1L = surface_measure_arcs(L, as_arcs(V));
    return (lenV * s1K + lenU * s1L) / kTwoPi;
}

McEstimate contact_mr(const ConvexBody& K, const SphereRegion& Uprime, const ConvexBody& L,
                      const SphereRegion& Vprime, double r, const TranslationWindow& window,
                      std::uint64_t samples, std::uint64_t seed) {
    if (!(r > 0.0)) throw ValidationError("contact_mr: r must be positive");
    if (samples < 1) throw ValidationError("contact_mr: samples must be >= 1");
    auto smooth = [](const ConvexBody& b) {
        if (const Ball2* ball = std::get_if<Ball2>(&b)) return ball->radius > 0.0;
        return std::holds_alternative<SupportBody2>(b);
    };
    if (!smooth(K) || !smooth(L))
        throw UnsupportedError("contact_mr supports smooth 2D bodies (balls, support bodies)");
    validate_window(window, K, L, r);

    const std::uint64_t hits = run_chunked(samples, seed, [&](SplitMix64& rng) -> std::uint64_t {
        const double phi = sample_rotation_angle(rng);
        const Mat2 R = rotation_matrix2(phi);
        const Vec2 t = sample_in_window2(window, rng);
        const GapResult g = closest_gap2(K, L, R, t);
        if (!(g.gap > 0.0) || g.gap >= r) return 0;
        const double thetaW = std::atan2(g.direction.y(), g.direction.x());
        if (!Uprime.contains_angle(thetaW)) return 0;
        return Vprime.contains_angle(thetaW + kPi - phi) ? 1u : 0u;
    });
    return indicator_estimate(hits, samples, window.volume(), seed);
}

PkfReport pkf_mc_report(const ConvexBody& A, const ConvexBody& B, std::uint64_t samples,
                        std::uint64_t seed) {
    PkfReport rep;
    const TranslationWindow window = translation_window(A, B);
    rep.estimate = estimate_pkf(A, B, window, samples, seed);
    rep.exact = pkf_rhs(A, B);
    rep.z = rep.estimate.stdError > 0 ? (rep.estimate.value - rep.exact) / rep.estimate.stdError
                                      : 0.0;
    return rep;
}

}  // namespace kinemetry
