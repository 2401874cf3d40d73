#ifndef CONEVANISH_KERNELS_HPP
#define CONEVANISH_KERNELS_HPP

#include <vector>

#include "conevanish/polynomial.hpp"

namespace conevanish {
namespace kernels {

// Global cap on worker threads. Initialized from CONEVANISH_THREADS (falling
// back to the OpenMP default); 1 disables parallel regions.
int thread_limit();
void set_thread_limit(int n);

// Full multivariate division: remainder of f by the list `basis`, reducing
// every term. Divisor selection is first match in list order, so the result
// is a deterministic function of (f, basis). If `quotients` is non-null it
// receives one quotient per basis element with f = sum q_i b_i + r.
Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis,
                       std::vector<Polynomial>* quotients = nullptr);

// Reduce each polynomial independently against a fixed basis snapshot.
// The parallel version partitions the batch across OpenMP threads; each
// element's reduction is independent, so the output is bit-identical to the
// serial reference for every thread count.
std::vector<Polynomial> reduce_batch_serial(const std::vector<Polynomial>& batch,
                                            const std::vector<Polynomial>& basis);
std::vector<Polynomial> reduce_batch_parallel(const std::vector<Polynomial>& batch,
                                              const std::vector<Polynomial>& basis,
                                              int threads = 0);

} // namespace kernels
} // namespace conevanish

#endif
