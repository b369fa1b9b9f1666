#pragma once

#include <string>

#include <json.hpp>

#include "carnot/bch.hpp"
#include "carnot/engel.hpp"
#include "carnot/lie_algebra.hpp"
#include "carnot/semigen.hpp"

namespace carnot {

using Json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;

// Presentation files. Parse errors carry a field path, e.g.
// "brackets[2].result.Z: invalid rational \"1/0\"".
Presentation presentation_from_json(const Json& j);
Json presentation_to_json(const Presentation& p);
GradedLieAlgebra algebra_from_json(const Json& j);
Json algebra_to_json(const GradedLieAlgebra& g);

// Reads a JSON file; syntax errors are reported as "path:line:column: message".
Json read_json_file(const std::string& path);
GradedLieAlgebra load_algebra(const std::string& path);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j, std::size_t dim, const std::string& where);
Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j, std::size_t dim, const std::string& where);
// Comma-separated rationals, e.g. "0,1/2,-3".
Vec parse_vector(const std::string& text, std::size_t dim);

EngelFailure parse_engel_failure(const std::string& s);

Json to_json(const GradedLieAlgebra& g, const Decision& d);
Decision decision_from_json(const GradedLieAlgebra& g, const Json& j);
Json to_json(const GradedLieAlgebra& g, const StarReport& r);
Json to_json(const GradedLieAlgebra& g, const DiamondReport& r);
Json to_json(const GradedLieAlgebra& g, const EdgeApprox& e, const Vec& lambda);
Json to_json(const GradedLieAlgebra& g, const EngelSearch& s);
Json to_json(const GradedLieAlgebra& g, const Recognition& r);
Json to_json(const GradedLieAlgebra& g, const SampleRun& run);

Json product_quotient_to_json(const ProductQuotientCert& c);
ProductQuotientCert product_quotient_from_json(const GradedLieAlgebra& g, const Json& j);

}  // namespace carnot
