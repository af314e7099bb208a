#include "nk/sturm.hpp"

#include <algorithm>

#include "nk/errors.hpp"

namespace nk {

namespace {

// Rational polynomial remainder scaled to a primitive integer polynomial
// by a positive factor, so the sign structure of the Euclidean remainder
// sequence survives.
IntPoly positive_primitive_remainder(const IntPoly& a, const IntPoly& b) {
    std::vector<Rat> rem(a.coeffs().size());
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = Rat(a.coeffs()[i]);
    int db = b.degree();
    Rat lead(b.leading());
    for (int k = a.degree() - db; k >= 0; --k) {
        Rat f = rem[k + db] / lead;
        if (f == 0) continue;
        for (int i = 0; i <= db; ++i) rem[k + i] -= f * Rat(b.coeffs()[i]);
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (rem.empty()) return IntPoly();
    Int l(1);
    for (const auto& r : rem) l = boost::multiprecision::lcm(l, denominator(r));
    std::vector<Int> ri(rem.size());
    for (std::size_t i = 0; i < rem.size(); ++i) ri[i] = numerator(rem[i] * Rat(l));
    IntPoly out{std::move(ri)};
    Int g = out.content();
    std::vector<Int> norm(out.coeffs());
    for (auto& x : norm) x /= g;
    return IntPoly(std::move(norm));
}

} // namespace

SturmChain::SturmChain(const IntPoly& p) {
    if (p.is_zero()) throw domain_error("Sturm chain of the zero polynomial");
    IntPoly sf = squarefree_part(p);
    chain_.push_back(sf);
    if (sf.degree() >= 1) {
        chain_.push_back(sf.derivative());
        while (chain_.back().degree() >= 1) {
            IntPoly r = positive_primitive_remainder(chain_[chain_.size() - 2], chain_.back());
            if (r.is_zero()) break;
            chain_.push_back(-r);
        }
    }
}

int SturmChain::variations_at(const Rat& x) const {
    int last = 0, var = 0;
    for (const auto& p : chain_) {
        int s = p.sign_at(x);
        if (s == 0) {
            if (&p == &chain_.front())
                throw internal_error("Sturm variation requested at a root");
            continue;
        }
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

int SturmChain::count(const Rat& lo, const Rat& hi) const {
    if (!(lo < hi)) throw domain_error("Sturm count needs lo < hi");
    return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_all_real() const {
    const IntPoly& sf = chain_.front();
    if (sf.degree() < 1) return 0;
    Rat b = sf.root_bound();
    return count(-b, b);
}

namespace {

struct Segment {
    Rat lo, hi;
    int vLo, vHi;
};

// Shrink a symmetric window around an exact rational root until it
// isolates that root alone.
Segment window_around_root(const SturmChain& chain, const Rat& root, Rat eps) {
    const IntPoly& sf = chain.squarefree();
    for (;;) {
        Rat lo = root - eps, hi = root + eps;
        if (sf.sign_at(lo) != 0 && sf.sign_at(hi) != 0) {
            int vLo = chain.variations_at(lo), vHi = chain.variations_at(hi);
            if (vLo - vHi == 1) return {lo, hi, vLo, vHi};
        }
        eps /= 2;
    }
}

} // namespace

std::vector<IsolatingInterval> sturm_isolate_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw domain_error("cannot isolate roots of the zero polynomial");
    if (p.degree() < 1) return {};
    SturmChain chain(p);
    const IntPoly& sf = chain.squarefree();

    Rat b = sf.root_bound();
    std::vector<Segment> work, found;
    {
        int vLo = chain.variations_at(-b), vHi = chain.variations_at(b);
        if (vLo - vHi > 0) work.push_back({-b, b, vLo, vHi});
    }
    while (!work.empty()) {
        Segment s = work.back();
        work.pop_back();
        int count = s.vLo - s.vHi;
        if (count == 0) continue;
        if (count == 1) {
            found.push_back(s);
            continue;
        }
        Rat mid = (s.lo + s.hi) / 2;
        if (sf.sign_at(mid) == 0) {
            Segment w = window_around_root(chain, mid, (s.hi - s.lo) / 8);
            found.push_back(w);
            int vwl = w.vLo, vwh = w.vHi;
            work.push_back({s.lo, w.lo, s.vLo, vwl});
            work.push_back({w.hi, s.hi, vwh, s.vHi});
        } else {
            int vm = chain.variations_at(mid);
            work.push_back({s.lo, mid, s.vLo, vm});
            work.push_back({mid, s.hi, vm, s.vHi});
        }
    }
    std::sort(found.begin(), found.end(),
              [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
    std::vector<IsolatingInterval> out;
    out.reserve(found.size());
    for (const auto& s : found) out.push_back({s.lo, s.hi, p, s.vLo, s.vHi});
    if (static_cast<int>(out.size()) != chain.count_all_real())
        throw internal_error("root isolation lost a root");
    return out;
}

IsolatingInterval refine_interval(const IsolatingInterval& iv, const Rat& width) {
    if (width <= 0) throw domain_error("refinement width must be positive");
    SturmChain chain(iv.poly);
    const IntPoly& sf = chain.squarefree();
    Rat lo = iv.lo, hi = iv.hi;
    int vLo = iv.signChangesLo, vHi = iv.signChangesHi;
    while (hi - lo >= width) {
        Rat mid = (lo + hi) / 2;
        if (sf.sign_at(mid) == 0) {
            Rat eps = std::min(width / 4, (hi - lo) / 8);
            Segment w = window_around_root(chain, mid, eps);
            lo = w.lo; hi = w.hi; vLo = w.vLo; vHi = w.vHi;
            break;
        }
        int vm = chain.variations_at(mid);
        if (vLo - vm == 1) {
            hi = mid;
            vHi = vm;
        } else {
            lo = mid;
            vLo = vm;
        }
    }
    return {lo, hi, iv.poly, vLo, vHi};
}

namespace {

// Positive real roots exist iff the polynomial, with any t^k factor
// stripped, still changes sign count on (0, bound).
bool has_positive_real_root(const IntPoly& p) {
    std::vector<Int> c = p.coeffs();
    std::size_t shift = 0;
    while (shift < c.size() && c[shift] == 0) ++shift;
    std::vector<Int> stripped(c.begin() + shift, c.end());
    IntPoly q{std::move(stripped)};
    if (q.degree() < 1) return false;
    SturmChain chain(q);
    Rat b = chain.squarefree().root_bound();
    return chain.count(Rat(0), b) > 0;
}

} // namespace

RootComparison compare_largest_real_roots(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero())
        throw domain_error("largest-root comparison of the zero polynomial");
    if (!has_positive_real_root(p) || !has_positive_real_root(q))
        throw domain_error("largest-root comparison requires a real root > 0");

    auto ip = sturm_isolate_real_roots(p);
    auto iq = sturm_isolate_real_roots(q);
    IsolatingInterval a = ip.back(), b = iq.back();

    IntPoly g = poly_gcd(p, q);
    bool gcdUsable = g.degree() >= 1;
    // Roots of gcd are common roots of p and q, so interval endpoints
    // (never roots of p or q) are valid Sturm evaluation points for it.
    SturmChain gchain = gcdUsable ? SturmChain(g) : SturmChain(IntPoly({1}));

    for (;;) {
        if (a.hi <= b.lo)
            return {RootOrder::Less, a, b, IntPoly()};
        if (b.hi <= a.lo)
            return {RootOrder::Greater, a, b, IntPoly()};
        if (gcdUsable) {
            Rat ulo = std::min(a.lo, b.lo), uhi = std::max(a.hi, b.hi);
            if (gchain.count(a.lo, a.hi) == 1 && gchain.count(b.lo, b.hi) == 1 &&
                gchain.count(ulo, uhi) == 1)
                return {RootOrder::Equal, a, b, g};
        }
        a = refine_interval(a, a.width() / 2);
        b = refine_interval(b, b.width() / 2);
    }
}

} // namespace nk
