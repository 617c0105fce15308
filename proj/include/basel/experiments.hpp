#pragma once

// One table builder per command-line experiment. Each records its own
// parameters on the returned table.

#include <cstdint>
#include <span>

#include "basel/table.hpp"
#include "basel/testfn.hpp"

namespace basel::experiments {

/// Rows 2k = 2, 4, ..., 2*max_k: exact zeta(2k), its float value, and with
/// `oracle` the Bernoulli value (NumericalError if the two ever differ).
report::Table zeta_table(unsigned max_k, bool oracle);

/// Kernel samples: x, sum form, compact form.
report::Table kernel_table(std::uint32_t n, std::size_t samples, double xmin, double xmax);

/// delta_N[phi] against 2 pi phi(0) for each N in `orders`.
report::Table action_table(const testfn::TestFunction& phi, std::span<const std::uint64_t> orders, double tol);

/// Partial-sum action of the comb against the lattice sum.
report::Table comb_table(const testfn::TestFunction& phi, std::uint64_t n, double tol);

/// Fourier partial sum of order 1 or 2 against its floor/ceiling closed form.
report::Table fourier_table(unsigned order, std::uint64_t n, std::size_t samples, double xmin, double xmax);

/// Truncated sinc integrals for N = 0..n_max against pi.
report::Table sinc_table(unsigned n_max, double tol);

} // namespace basel::experiments
