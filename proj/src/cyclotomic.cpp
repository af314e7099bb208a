#include "nk/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "nk/errors.hpp"

namespace nk {

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

const IntPoly& cyclotomic(unsigned n) {
    static std::map<unsigned, IntPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d, computed iteratively
    // so the recursion never re-enters the lock.
    for (unsigned m = 1; m <= n; ++m) {
        if (n % m || cache.count(m)) continue;
        IntPoly num = IntPoly::x_power(m) - IntPoly({1});
        for (unsigned d = 1; d < m; ++d) {
            if (m % d) continue;
            auto q = divide_exact(num, cache.at(d));
            if (!q) throw internal_error("cyclotomic division failed");
            num = *q;
        }
        cache.emplace(m, std::move(num));
    }
    return cache.at(n);
}

CyclotomicSplit cyclotomic_split(const IntPoly& p) {
    if (p.is_zero() || !p.is_monic())
        throw domain_error("cyclotomic split requires a monic polynomial");

    CyclotomicSplit out;
    out.rest = p;
    unsigned degBound = static_cast<unsigned>(p.degree());
    // phi(n) >= sqrt(n / 2), so phi(n) <= D forces n <= 2 D^2.
    for (unsigned n = 1; n <= 2 * degBound * degBound && out.rest.degree() >= 1; ++n) {
        if (euler_phi(n) > static_cast<unsigned>(out.rest.degree())) continue;
        const IntPoly& phi = cyclotomic(n);
        while (true) {
            auto q = divide_exact(out.rest, phi);
            if (!q) break;
            out.rest = *q;
            out.multiplicities[n] += 1;
        }
    }
    auto part = divide_exact(p, out.rest);
    if (!part) throw internal_error("cyclotomic part does not divide its polynomial");
    out.cyclotomicPart = *part;
    return out;
}

bool is_quasi_unipotent(const IMat& m) {
    return cyclotomic_split(char_poly(m)).rest.degree() == 0;
}

} // namespace nk
