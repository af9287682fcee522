#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "longcycles/graph.hpp"
#include "longcycles/solver.hpp"

namespace longcycles {

class CertificateFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"ell", "n", "budget", "type": "transversal" | "disjoint_pair",
//  "vertices" | "cycle1" + "cycle2", optional "trace"}
std::string certificate_to_json(const Certificate& cert, bool with_trace);

// Inverse of certificate_to_json. Throws CertificateFormatError on malformed
// JSON, a missing field, or a field of the wrong shape.
Certificate parse_certificate(std::string_view text);

enum class CertificateKind { kTransversal, kDisjointPair };

struct VerifyResult {
  bool ok = false;
  CertificateKind kind = CertificateKind::kTransversal;
  int size = 0;  // |X|, or the shorter cycle length for a pair
  int budget = 0;
  std::string reason;  // empty when ok
};

// Rechecks every property of the certificate against g from scratch.
VerifyResult verify_certificate(const Graph& g, int ell, const Certificate& cert);

// Same, starting from certificate JSON. Structural problems inside the
// lists (out-of-range ids, repeated cycle vertices) are reported as a failed
// result; unreadable JSON throws CertificateFormatError.
VerifyResult verify_certificate_json(const Graph& g, int ell, std::string_view text);

}  // namespace longcycles
