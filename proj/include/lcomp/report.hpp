#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lcomp/properties.hpp"
#include "lcomp/select.hpp"

namespace lcomp {

inline constexpr const char* kVersion = "1.0.0";

/// Key order is insertion order, so dumps are byte-for-byte reproducible.
using Json = nlohmann::ordered_json;

class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct JobSpec {
  int64_t level = 0;
  int64_t p = 0;
  int weight = 2;
  std::string character = "trivial";  // descriptor for parse_character, or "all"
  std::optional<size_t> orbit;        // index into the matching orbits; all when empty
  std::vector<std::string> constraints;
  bool char_table = false;
  bool admissible_pair = false;
  int64_t class_limit = 1000000;
  bool timing = false;  // wall-clock fields make the output nondeterministic
  size_t property_samples = 100;
};

/// Checks the invariants (p prime, p | level, k >= 2); throws UsageError.
void validate(const JobSpec& job);

/// Field elements are {"text", "field", "coords"}: rational coordinates in the
/// power basis of the generator, and the defining polynomial ("x" for Q).
Json encode(const NfElem& x);
Json encode(const NfMatrix& m);
Json encode(const SmoothCharacterQp& chi);
/// Inverse of encode: rebuilds the field from its polynomial. The result lives in
/// a fresh field object unless `field` (same polynomial) is supplied.
NfElem decode_element(const Json& j, const FieldPtr& field = nullptr);
NfMatrix decode_matrix(const Json& j, const FieldPtr& field = nullptr);

/// Runs the pipeline on every selected orbit, in the canonical orbit order.
/// Throws NotFoundError when no orbit matches. A class enumeration over the
/// limit leaves a partial report with "limit_exceeded" and status "size-limit".
Json run_job(const JobSpec& job);

/// Indented key: value projection of a report; element objects print as text.
std::string render_text(const Json& report);

struct GoldenRow {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass() const { return expected == actual; }
};
/// Reruns the worked examples and the conductor 25 table through run_job and
/// compares dimensions, traces, orders and polynomials as exact strings.
std::vector<GoldenRow> golden_suite();

}  // namespace lcomp
