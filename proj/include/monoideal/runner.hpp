#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "monoideal/caps.hpp"
#include "monoideal/field.hpp"
#include "monoideal/session.hpp"

namespace monoideal {

using Json = nlohmann::json;

struct RunOptions {
  FieldSpec field = FieldSpec::rationals();
  long max_k = 3;
  ResourceCaps caps;
  bool timing = false;
  std::string mode = "ordinary";  // for `sequences`
};

/// Dispatch one CLI command against a parsed session.  The returned
/// document serializes deterministically (nlohmann objects are
/// key-sorted); timing is only reported when requested.
Json run_command(const std::string& command, const Session& session,
                 const std::vector<std::string>& args, const RunOptions& opts);

/// Golden reproduction of the paper-example fixtures found in
/// `fixtures_dir`.  Stretch items may report "inconclusive (resource)"
/// without failing the suite.
Json paper_suite(const std::string& fixtures_dir, const RunOptions& opts);

/// Parse a caps override of the form "lattice=N,faces=N,scp=N,monomials=N,cliques=N".
ResourceCaps parse_caps(const std::string& text, ResourceCaps base);

}  // namespace monoideal
