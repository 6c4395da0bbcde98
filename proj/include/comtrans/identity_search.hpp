#pragma once

// Identity discovery: kernels of expansion maps, module generators, new
// identities modulo consequences, and the per-partition multiplicity tables.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "comtrans/exact_linalg.hpp"
#include "comtrans/symmetric_group.hpp"
#include "comtrans/ternary_terms.hpp"

namespace comtrans {

// Above this many kernel vectors LLL is skipped and only pairwise size
// reduction is applied (recorded in the report).
inline constexpr std::size_t kLllDimensionCap = 400;

struct KernelReport {
  std::size_t weight = 0;
  OpList ops;
  std::size_t rows = 0, cols = 0;
  std::size_t expansion_rank = 0;
  std::size_t nullity = 0;
  Integer max_length_before;     // over the Hermite-form kernel basis
  LatticeBasis reduced;          // sorted by length then lex, sign-normalized
  std::vector<Integer> lengths;  // squared lengths of `reduced`
  bool lll_applied = false;
};

// Expansion matrix, integer kernel via HNF with transform, the kernel lattice
// put in Hermite form (a canonical starting basis), LLL, sort.
KernelReport kernel_pipeline(std::size_t w, const OpList& ops, std::size_t lll_cap = kLllDimensionCap);

// All (2w+1)! permuted copies of f as coefficient vectors.
std::vector<std::vector<Integer>> orbit_rows(const MultilinearPoly& f, const MonomialIndex& idx);
// Scales f to a primitive integer polynomial.
MultilinearPoly integral_primitive(const MultilinearPoly& f);

// Greedy scan: keep row i iff it is outside the span of the S_n-orbits of the
// rows kept so far. Exact.
std::vector<std::size_t> minimal_module_generators(const KernelReport& report);

struct NewGeneratorReport {
  std::size_t consequences = 0;      // number of consequences before permuting
  std::size_t consequence_rows = 0;  // rows of C (all permutations)
  std::size_t consequence_rank = 0;
  std::size_t kernel_rank = 0;
  std::vector<std::size_t> new_rows;  // indices into the reduced kernel
  std::vector<MultilinearPoly> new_identities;
  std::size_t final_rank = 0;
};

// Builds all permuted consequences of `lower` at weight w, then stacks orbits
// of reduced kernel rows that raise the rank until it reaches the nullity.
// Exact ranks.
NewGeneratorReport find_new_generators(const KernelReport& report, const std::vector<MultilinearPoly>& lower);

// Exact rank of the span of all permutations of the consequences of `lower`
// together with all permutations of `extra` (weight w identities).
std::size_t consequence_rank(std::size_t w, const OpList& ops, const std::vector<MultilinearPoly>& lower,
                             const std::vector<MultilinearPoly>& extra = {});

bool verify_identity(const MultilinearPoly& f);

struct WacReport {
  std::size_t kernel_rank = 0;
  std::size_t consequence_rank = 0;
  std::size_t new_module_dimension = 0;
  bool derivation_identity_in_kernel = false;
  bool misprinted_identity_in_kernel = false;
  std::size_t derivation_orbit_dimension = 0;  // modulo the consequences
};

WacReport wac_analysis();
std::size_t wac_new_module_dimension();

// ---------------------------------------------------------------------------
// Per-partition pipeline

struct MultiplicityRow {
  Partition lambda;
  std::size_t d = 0;
  std::size_t c = 0;  // rank of the consequence matrix C_lambda
  std::size_t e = 0;  // rank of the expansion block row E_lambda
  std::size_t a = 0;  // types * d - e
  std::size_t n = 0;  // a - c
  std::size_t c_prime_a = 0, c_prime_b = 0;  // c modulo each prime
  bool primes_agree = false;
  bool exact_checked = false;  // c recomputed in exact arithmetic
  bool contained = false;      // C_lambda lies in the row space of N_lambda
};

struct MultiplicityTable {
  std::size_t weight = 0;
  OpList ops;
  std::size_t types = 0;
  std::size_t consequences = 0;
  std::vector<MultiplicityRow> rows;
};

struct TableOptions {
  std::vector<Partition> only;              // empty: all partitions
  std::vector<Partition> exact_partitions;  // recompute c exactly for these
  std::size_t threads = 0;                  // 0: from COMTRANS_THREADS / hardware
};

// Single-operation or mixed table at weight w from the given lower-weight
// identities (weight w-1).
MultiplicityTable multiplicity_table(std::size_t w, const OpList& ops, const std::vector<MultilinearPoly>& lower,
                                     const TableOptions& options = {});

// Lower identities for the weight 3 single-operation tables: the six
// consequences of the weight-1 relation plus the weight-2 generator.
std::vector<MultilinearPoly> degree7_lower_identities(OpId op);
MultiplicityTable degree7_table(OpId op, const TableOptions& options = {});

struct MixedRow {
  Partition lambda;
  std::size_t d = 0;
  std::size_t a = 0;
  std::size_t e = 0;
  std::size_t c_prime_a = 0, c_prime_b = 0;
  std::size_t c = 0;
  bool consequences_verified = false;  // every consequence expands to zero
  bool rcf_equal = false;              // RCF(CD) == RCF(N) modulo kPrimeA
  bool ok = false;                     // c == a and rcf_equal
  std::size_t single_op_rank = 0;      // a^com + a^tra: dimension of D^1 + D^2
};

struct MixedOptions {
  std::vector<Partition> only;
  std::size_t threads = 0;
  bool include_single_op_modules = true;  // false drops D^1, D^2 (sanity runs)
  bool early_stop = true;                 // stop adding rows once rank reaches a
};

// The 41 weight-2 identities: consequences of the three weight-1 relations
// plus the five weight-2 generators.
std::vector<MultilinearPoly> mixed_weight2_identities();
std::vector<MixedRow> degree7_mixed_check(const MixedOptions& options = {});

std::size_t thread_count(std::size_t requested);

}  // namespace comtrans
