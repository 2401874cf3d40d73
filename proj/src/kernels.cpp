#include "conevanish/kernels.hpp"

#include <atomic>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace conevanish {
namespace kernels {

namespace {

int initial_thread_limit() {
    if (const char* env = std::getenv("CONEVANISH_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::atomic<int>& limit_slot() {
    static std::atomic<int> limit{initial_thread_limit()};
    return limit;
}

} // namespace

int thread_limit() { return limit_slot().load(); }

void set_thread_limit(int n) { limit_slot().store(n >= 1 ? n : 1); }

Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis,
                       std::vector<Polynomial>* quotients) {
    const PolyRing& ring = f.ring();
    const Field& F = ring.field();
    std::vector<std::vector<Term>> qt;
    if (quotients) qt.resize(basis.size());

    Polynomial h = f;
    std::vector<Term> remainder;
    while (!h.is_zero()) {
        const Term& lt = h.lead();
        std::size_t idx = basis.size();
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (!basis[k].is_zero() && basis[k].lead_monomial().divides(lt.mono)) {
                idx = k;
                break;
            }
        }
        if (idx == basis.size()) {
            remainder.push_back(lt);
            h = h.tail();
            continue;
        }
        const Polynomial& g = basis[idx];
        Scalar c = F.div(lt.coeff, g.lead_coeff());
        Monomial m = lt.mono / g.lead_monomial();
        if (quotients) qt[idx].push_back({m, c});
        h = h.axpy(c, m, g);
    }
    if (quotients) {
        quotients->clear();
        quotients->reserve(basis.size());
        for (auto& terms : qt)
            quotients->push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
    // remainder terms were appended in strictly decreasing order
    return Polynomial::from_ordered_terms(ring, std::move(remainder));
}

std::vector<Polynomial> reduce_batch_serial(const std::vector<Polynomial>& batch,
                                            const std::vector<Polynomial>& basis) {
    std::vector<Polynomial> out(batch.size());
    for (std::size_t i = 0; i < batch.size(); ++i)
        out[i] = reduce_full(batch[i], basis);
    return out;
}

std::vector<Polynomial> reduce_batch_parallel(const std::vector<Polynomial>& batch,
                                              const std::vector<Polynomial>& basis,
                                              int threads) {
    if (threads <= 0) threads = thread_limit();
    std::vector<Polynomial> out(batch.size());
#ifdef _OPENMP
    #pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long i = 0; i < static_cast<long>(batch.size()); ++i)
        out[static_cast<std::size_t>(i)] = reduce_full(batch[static_cast<std::size_t>(i)], basis);
#else
    (void)threads;
    for (std::size_t i = 0; i < batch.size(); ++i)
        out[i] = reduce_full(batch[i], basis);
#endif
    return out;
}

} // namespace kernels
} // namespace conevanish
