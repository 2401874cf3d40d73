#include "conevanish/hilbert.hpp"

#include <algorithm>
#include <map>

namespace conevanish {

namespace {

void poly_add(std::vector<mpz_class>& a, const std::vector<mpz_class>& b, std::size_t shift,
              const mpz_class& scale) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += scale * b[i];
}

std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<mpz_class> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

void trim(std::vector<mpz_class>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.exponents() < b.exponents();
    });
    std::vector<Monomial> out;
    for (auto& m : gens) {
        bool redundant = false;
        for (const auto& kept : out)
            if (kept.divides(m)) { redundant = true; break; }
        if (!redundant) out.push_back(std::move(m));
    }
    return out;
}

std::vector<mpz_class> numerator_rec(std::vector<Monomial> gens, std::size_t nvars) {
    gens = minimalize_monomials(std::move(gens));
    if (gens.empty()) return {mpz_class(1)};
    if (gens[0].is_one()) return {};

    // pairwise coprime generators form a regular sequence: Koszul product
    bool coprime = true;
    for (std::size_t a = 0; a < gens.size() && coprime; ++a)
        for (std::size_t b = a + 1; b < gens.size() && coprime; ++b)
            if (!gens[a].coprime(gens[b])) coprime = false;
    if (coprime) {
        std::vector<mpz_class> num{mpz_class(1)};
        for (const auto& m : gens) {
            std::vector<mpz_class> factor(m.degree() + 1, 0);
            factor[0] = 1;
            factor[m.degree()] = -1;
            num = poly_mul(num, factor);
        }
        return num;
    }

    // pivot on the most shared variable x: HS(I) = HS(I + (x)) + t * HS(I : x)
    std::vector<std::size_t> freq(nvars, 0);
    for (const auto& m : gens)
        for (std::size_t i = 0; i < nvars; ++i)
            if (m.exp(i)) ++freq[i];
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < nvars; ++i)
        if (freq[i] > freq[pivot]) pivot = i;

    std::vector<Monomial> plus;  // I + (x)
    std::vector<Monomial> colon; // I : x
    {
        std::vector<std::uint32_t> e(nvars, 0);
        e[pivot] = 1;
        plus.push_back(Monomial(e));
    }
    for (const auto& m : gens) {
        if (m.exp(pivot) == 0) {
            plus.push_back(m);
            colon.push_back(m);
        } else {
            std::vector<std::uint32_t> e = m.exponents();
            e[pivot] -= 1;
            colon.push_back(Monomial(std::move(e)));
        }
    }
    std::vector<mpz_class> num = numerator_rec(std::move(plus), nvars);
    poly_add(num, numerator_rec(std::move(colon), nvars), 1, mpz_class(1));
    trim(num);
    return num;
}

std::vector<Monomial> lead_monomials(const Ideal& I, const GroebnerOptions& opts) {
    std::vector<Monomial> lm;
    for (const auto& g : I.basis(opts)) lm.push_back(g.lead_monomial());
    return lm;
}

void require_homogeneous(const Ideal& I) {
    if (!I.is_homogeneous()) throw DomainError("operation requires a homogeneous ideal");
}

mpz_class binom(long n, long k) {
    // C(n, k) for integer n (possibly negative via the polynomial extension)
    if (k < 0) return 0;
    mpz_class num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

} // namespace

std::vector<mpz_class> monomial_hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars) {
    auto n = numerator_rec(std::move(gens), nvars);
    trim(n);
    return n;
}

std::string HilbertData::numerator_string() const {
    if (numerator.empty()) return "0";
    std::string s;
    bool first = true;
    for (std::size_t j = 0; j < numerator.size(); ++j) {
        if (numerator[j] == 0) continue;
        mpz_class c = numerator[j];
        std::string mag = mpz_class(abs(c)).get_str();
        if (first) {
            s += (c < 0 ? "-" : "");
            first = false;
        } else {
            s += (c < 0 ? " - " : " + ");
        }
        if (j == 0) {
            s += mag;
        } else {
            std::string t = j == 1 ? "t" : "t^" + std::to_string(j);
            s += (mag == "1") ? t : mag + "*" + t;
        }
    }
    return s.empty() ? "0" : s;
}

HilbertData hilbert_series(const Ideal& I, const GroebnerOptions& opts) {
    require_homogeneous(I);
    HilbertData hd;
    hd.ambient_vars = static_cast<int>(I.ring().nvars());
    hd.numerator = monomial_hilbert_numerator(lead_monomials(I, opts), I.ring().nvars());
    if (hd.numerator.empty()) { // unit ideal: empty scheme
        hd.dimension = -1;
        hd.degree = 0;
        return hd;
    }
    // strip (1 - t) factors: dimension = ambient - multiplicity of the root t=1
    std::vector<mpz_class> red = hd.numerator;
    int strips = 0;
    for (;;) {
        mpz_class at1 = 0;
        for (const auto& c : red) at1 += c;
        if (at1 != 0) break;
        // divide by (1 - t): q_j = sum_{i <= j} c_i
        std::vector<mpz_class> q(red.size() - 1);
        mpz_class acc = 0;
        for (std::size_t j = 0; j + 1 < red.size(); ++j) {
            acc += red[j];
            q[j] = acc;
        }
        trim(q);
        red = std::move(q);
        ++strips;
    }
    hd.reduced_numerator = red;
    hd.dimension = hd.ambient_vars - strips;
    mpz_class at1 = 0;
    for (const auto& c : red) at1 += c;
    hd.degree = at1;
    return hd;
}

mpz_class hilbert_function(const Ideal& I, long d, const GroebnerOptions& opts) {
    require_homogeneous(I);
    if (d < 0) return 0;
    HilbertData hd = hilbert_series(I, opts);
    long n = hd.ambient_vars;
    mpz_class v = 0;
    for (std::size_t j = 0; j < hd.numerator.size(); ++j) {
        long e = d - static_cast<long>(j);
        if (e < 0) continue;
        v += hd.numerator[j] * binom(n - 1 + e, n - 1);
    }
    return v;
}

mpz_class hilbert_polynomial_eval(const Ideal& I, long d, const GroebnerOptions& opts) {
    require_homogeneous(I);
    HilbertData hd = hilbert_series(I, opts);
    long n = hd.ambient_vars;
    mpz_class v = 0;
    // polynomial extension of C(n-1+d-j, n-1): product formula valid for all d
    for (std::size_t j = 0; j < hd.numerator.size(); ++j)
        v += hd.numerator[j] * binom(n - 1 + d - static_cast<long>(j), n - 1);
    return v;
}

namespace {

// minimum hitting set over generator supports, branch and bound
void hitting_rec(const std::vector<std::vector<std::size_t>>& supports, std::size_t idx,
                 std::vector<bool>& chosen, std::size_t chosen_count, std::size_t& best) {
    if (chosen_count >= best) return;
    while (idx < supports.size()) {
        bool hit = false;
        for (auto v : supports[idx])
            if (chosen[v]) { hit = true; break; }
        if (!hit) break;
        ++idx;
    }
    if (idx == supports.size()) {
        best = std::min(best, chosen_count);
        return;
    }
    for (auto v : supports[idx]) {
        if (chosen[v]) continue;
        chosen[v] = true;
        hitting_rec(supports, idx + 1, chosen, chosen_count + 1, best);
        chosen[v] = false;
    }
}

} // namespace

int krull_dimension(const Ideal& I, const GroebnerOptions& opts) {
    const auto lm = minimalize_monomials(lead_monomials(I, opts));
    if (!lm.empty() && lm[0].is_one()) return -1; // unit ideal, empty scheme
    const std::size_t n = I.ring().nvars();
    std::vector<std::vector<std::size_t>> supports;
    for (const auto& m : lm) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (m.exp(i)) s.push_back(i);
        supports.push_back(std::move(s));
    }
    // dim = n - (smallest variable set meeting every lead-term support)
    std::size_t best = n + 1;
    std::vector<bool> chosen(n, false);
    hitting_rec(supports, 0, chosen, 0, best);
    return static_cast<int>(n - best);
}

} // namespace conevanish
