#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "galtrunc/permgroup.hpp"
#include "galtrunc/poly.hpp"

namespace galtrunc {

enum class CertaintyTag { Proven, EliminatedToSet, Heuristic, Unknown };

std::string to_string(CertaintyTag tag);
CertaintyTag parse_certainty_tag(std::string_view text);

struct Certainty {
  CertaintyTag tag = CertaintyTag::Unknown;
  std::vector<std::string> candidates;  // EliminatedToSet
  std::uint64_t sample_count = 0;       // Heuristic
  std::uint64_t prime_bound = 0;        // Heuristic

  /// Proven > EliminatedToSet > Heuristic > Unknown.
  int rank() const;
};

/// One tagged fact. `data` holds the kind-specific payload.
struct Evidence {
  std::string kind;
  nlohmann::json data;
};

struct GaloisIdentification {
  std::string group_name;
  std::optional<std::string> t_notation;
  Certainty certainty;
  std::vector<Evidence> evidence;
  int degree = 0;
  IntPoly polynomial;  // the polynomial actually classified

  const Evidence* find(std::string_view kind) const;
};

struct GaloisConfig {
  std::uint64_t prime_bound = 10000;
  bool all_factors = false;
  std::uint64_t min_heuristic_samples = 200;
};

// ---------------------------------------------------------------------------
// Building blocks.

/// Degrees of the mod-p factors, or nullopt when p divides lc(f) or f is not
/// squarefree mod p.
std::optional<CycleType> dedekind_cycle_type(const IntPoly& f, std::uint64_t p);

struct FrobeniusSample {
  std::uint64_t prime;
  CycleType type;
};

/// Cycle types at the good primes below `prime_bound`, ascending. Sampling
/// stops early once `stop` returns true for the samples collected so far.
std::vector<FrobeniusSample> sample_cycle_types(const IntPoly& f, std::uint64_t prime_bound,
                                                const std::function<bool(const FrobeniusSample&)>& stop = {});

/// True iff disc(f) is the square of a rational number. Throws on disc = 0.
bool disc_is_square(const RatPoly& f);
bool disc_is_square(const IntPoly& f);

/// Resolvent cubic of a quartic, monicized: roots x1x2+x3x4 and conjugates.
RatPoly quartic_resolvent(const IntPoly& f);

struct QuinticResolvent {
  int tschirnhaus = 0;        // roots were replaced by r + c r^2 with this c
  std::uint64_t prime = 0;    // completely split prime used for the p-adic roots
  IntPoly sextic;             // monic, integer, squarefree
  std::optional<BigInt> root; // integer root if any
  // Filled when `root` is set: (y - psi)(y - psi') for the cyclic invariant.
  std::optional<IntPoly> cyclic_quadratic;
};

/// Resolvent of the degree-6 orbit of an F20 invariant of the roots of a
/// degree-5 polynomial, computed exactly from p-adic roots at a completely
/// split prime. `start_tschirnhaus` forces the first shift to try.
QuinticResolvent quintic_resolvent(const IntPoly& f, int start_tschirnhaus = 0);

// ---------------------------------------------------------------------------
// Tiers.

GaloisIdentification exact_small_degree(const IntPoly& f);
GaloisIdentification eliminate_degree_le7(const IntPoly& f, std::uint64_t prime_bound);
GaloisIdentification sn_an_certificate(const IntPoly& f, std::uint64_t prime_bound);
GaloisIdentification cyclic_heuristic(const IntPoly& f, std::uint64_t prime_bound,
                                      std::uint64_t min_samples = 200);

struct WreathReport {
  bool detected = false;
  int shift = 0;       // f = x^shift * g(x^block_size)
  int block_size = 1;
  IntPoly inner;       // g
  std::string block_group;  // action on one block: C2, S3, D4, ...
  std::optional<GaloisIdentification> inner_group;
  std::uint64_t order_lower_bound = 1;
  std::uint64_t sample_count = 0;
  std::string report;
};

WreathReport wreath_structure(const IntPoly& f, std::uint64_t prime_bound = 10000);

GaloisIdentification classify(const IntPoly& f, const GaloisConfig& config = {});
/// One identification per distinct irreducible factor of degree >= 1.
std::vector<GaloisIdentification> classify_all_factors(const IntPoly& f, const GaloisConfig& config = {});

/// Re-derives every fact recorded in a Proven identification. Returns an
/// empty string on success, otherwise a description of the first failure.
std::string verify_identification(const GaloisIdentification& id);

/// Normalizes spellings: "S_{6}" -> "S6", "\mathcal{A}_4" -> "A4", "B_3" ->
/// "C2wrS3", "4T3" -> "D4", and small-degree coincidences (S2 = C2, A3 = C3,
/// C2wrS2 = D4).
std::string canonical_group_name(std::string_view name);

/// Order of the named group when it is S_n, A_n, C_n, D_n, C2wrS_t or in the
/// embedded catalogue.
std::optional<BigInt> group_order(std::string_view name);

nlohmann::json to_json(const GaloisIdentification& id);
GaloisIdentification galois_from_json(const nlohmann::json& j);

}  // namespace galtrunc
