#include "eqlab/circle_map.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eqlab {

struct CircleMap::Impl {
    enum class Kind { Identity, MobiusKind, Tabulated, Func, Composite };
    Kind kind = Kind::Identity;
    Mobius m;
    // Tabulated: xs strictly increasing in [x0, x0 + 2pi), ys the lifted
    // images (strictly increasing; one period advances by exactly 2pi).
    std::vector<double> xs, ys;
    std::function<BoundaryPoint(const BoundaryPoint&)> fn;
    std::shared_ptr<const Impl> outer, inner;

    BoundaryPoint eval(const BoundaryPoint& x) const {
        switch (kind) {
            case Kind::Identity:
                return x;
            case Kind::MobiusKind:
                return m.apply(x);
            case Kind::Tabulated:
                return BoundaryPoint(eval_tabulated(x.angle()));
            case Kind::Func:
                return fn(x);
            case Kind::Composite:
                return outer->eval(inner->eval(x));
        }
        throw std::logic_error("CircleMap: bad kind");
    }

    double eval_tabulated(double angle) const {
        size_t n = xs.size();
        double a = canonical_angle(angle);
        double wind = 0.0;
        if (a < xs[0]) {
            a += kTau;
            wind = -kTau;
        }
        // a now lies in [xs[0], xs[0] + 2pi).
        size_t hi = std::upper_bound(xs.begin(), xs.end(), a) - xs.begin();
        size_t lo = hi - 1;
        double x1, y1;
        if (hi == n) {
            x1 = xs[0] + kTau;
            y1 = ys[0] + kTau;
        } else {
            x1 = xs[hi];
            y1 = ys[hi];
        }
        double t = (a - xs[lo]) / (x1 - xs[lo]);
        return ys[lo] + t * (y1 - ys[lo]) + wind;
    }
};

CircleMap::CircleMap() : impl_(std::make_shared<Impl>()) {}
CircleMap::CircleMap(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

CircleMap CircleMap::identity() { return CircleMap(); }

CircleMap CircleMap::mobius(const Mobius& m) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::MobiusKind;
    impl->m = m;
    return CircleMap(std::move(impl));
}

CircleMap CircleMap::tabulated(std::vector<std::pair<double, double>> samples) {
    if (samples.size() < 3)
        throw std::invalid_argument("CircleMap::tabulated: need at least 3 samples");
    for (auto& s : samples) s.first = canonical_angle(s.first);
    std::sort(samples.begin(), samples.end());
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::Tabulated;
    size_t n = samples.size();
    impl->xs.resize(n);
    impl->ys.resize(n);
    for (size_t i = 0; i < n; ++i) {
        impl->xs[i] = samples[i].first;
        if (i > 0 && samples[i].first == samples[i - 1].first)
            throw std::invalid_argument("CircleMap::tabulated: duplicate sample angle");
    }
    // Lift the images: consecutive images advance by their ccw span, and the
    // total advance around one period must be exactly one turn.
    impl->ys[0] = canonical_angle(samples[0].second);
    double total = 0.0;
    for (size_t i = 1; i < n; ++i) {
        double step = ccw_span(samples[i - 1].second, samples[i].second);
        impl->ys[i] = impl->ys[i - 1] + step;
        total += step;
    }
    total += ccw_span(samples[n - 1].second, samples[0].second);
    if (std::abs(total - kTau) > 1e-9)
        throw std::invalid_argument(
            "CircleMap::tabulated: samples are not cyclically monotone");
    return CircleMap(std::move(impl));
}

CircleMap CircleMap::from_function(std::function<BoundaryPoint(const BoundaryPoint&)> f) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::Func;
    impl->fn = std::move(f);
    return CircleMap(std::move(impl));
}

BoundaryPoint CircleMap::operator()(const BoundaryPoint& x) const {
    return impl_->eval(x);
}

double CircleMap::apply_angle(double angle) const {
    if (impl_->kind == Impl::Kind::Tabulated)
        return canonical_angle(impl_->eval_tabulated(angle));
    return impl_->eval(BoundaryPoint(angle)).angle();
}

CircleMap CircleMap::compose(const CircleMap& other) const {
    if (impl_->kind == Impl::Kind::Identity) return other;
    if (other.impl_->kind == Impl::Kind::Identity) return *this;
    if (impl_->kind == Impl::Kind::MobiusKind &&
        other.impl_->kind == Impl::Kind::MobiusKind)
        return mobius(impl_->m.compose(other.impl_->m));
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::Composite;
    impl->outer = impl_;
    impl->inner = other.impl_;
    return CircleMap(std::move(impl));
}

bool CircleMap::is_mobius() const {
    return impl_->kind == Impl::Kind::MobiusKind ||
           impl_->kind == Impl::Kind::Identity;
}

const Mobius& CircleMap::mobius_part() const {
    static const Mobius kId = Mobius::identity();
    if (impl_->kind == Impl::Kind::Identity) return kId;
    if (impl_->kind != Impl::Kind::MobiusKind)
        throw std::logic_error("CircleMap::mobius_part: map is not Mobius");
    return impl_->m;
}

Mobius normalizing_mobius(const BoundaryPoint& x1, const BoundaryPoint& x2,
                          const BoundaryPoint& x3, const BoundaryPoint& t1,
                          const BoundaryPoint& t2, const BoundaryPoint& t3) {
    return Mobius::from_boundary_triple({x1, x2, x3}, {t1, t2, t3});
}

CircleMap normalize_three_points(const CircleMap& f, const BoundaryPoint& x1,
                                 const BoundaryPoint& x2, const BoundaryPoint& x3,
                                 const BoundaryPoint& t1, const BoundaryPoint& t2,
                                 const BoundaryPoint& t3) {
    Mobius post = normalizing_mobius(f(x1), f(x2), f(x3), t1, t2, t3);
    return CircleMap::mobius(post).compose(f);
}

double boundary_sup_distance(const CircleMap& f, const CircleMap& g, int samples) {
    if (samples < 1) throw std::invalid_argument("boundary_sup_distance: samples < 1");
    double sup = 0.0;
    for (int i = 0; i < samples; ++i) {
        BoundaryPoint x(kTau * i / samples);
        sup = std::max(sup, std::abs(f(x).point() - g(x).point()));
    }
    return sup;
}

}  // namespace eqlab
