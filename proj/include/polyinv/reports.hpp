#pragma once

#include "polyinv/closure.hpp"
#include "polyinv/pipelines.hpp"

#include <json.hpp>

namespace polyinv {

using Json = nlohmann::json;

/// Top-level report skeleton: {"schema":"1","command":...,"theorem":...}.
Json report_header(const std::string& command, const std::string& theorem);

Json to_json(const RationalVector& v);
Json to_json(const RationalMatrix& m);
Json to_json(const Classification& c);
Json to_json(const FunctionSpace& v);
Json to_json(const ClosureResult& r);
Json to_json(const MembershipResult& r);
Json to_json(const InteriorEvidence& e);
Json to_json(const StructuralReport& r);
Json to_json(const AnnihilatorReport& r);
Json to_json(const MontelReport& r);
Json to_json(const PowerClosureReport& r);
Json to_json(const DilationReport& r);
Json to_json(const DegreeBounds& b);
Json to_json(const CommutingSpectraReport& r);

/// Error object for failed runs: {"error": kebab-name, "message": ..., ...}.
Json error_json(const std::exception& e);

}  // namespace polyinv
