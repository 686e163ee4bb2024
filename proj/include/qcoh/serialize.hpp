#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qcoh/grading.hpp"
#include "qcoh/pwlift.hpp"
#include "qcoh/qclass.hpp"
#include "qcoh/weyl.hpp"

namespace qcoh {

enum class Format { Markdown, Json, Csv };

Format parse_format(std::string_view s);
std::string format_name(Format f);

// "1,2,1" -> {0,1,0}; the empty string is the identity. Throws InvalidInput.
std::vector<int> parse_word(std::string_view text, int rank);
// Comma-separated 1-based indices, kept in the given order.
std::vector<int> parse_index_list(std::string_view text, int rank);
std::string join_one_based(const std::vector<int>& zero_based, std::string_view sep = ",");

// s[1,2]; the identity is the empty string.
std::string format_weyl(const WeylGroup& g, int w);
// q1^2*q2*s[1,2]; coefficient shown unless it is 1; "1" for the unit.
std::string format_term(const WeylGroup& g, const BasisElement& b, const mpq_class& c = 1);
// Terms joined by " + " in basis order (by Weyl index, then q); "0" when empty.
std::string format_class(const WeylGroup& g, const QClass& x);

nlohmann::json weyl_json(const WeylGroup& g, int w);
// [{"word": [...], "q": [...], "coeff": "int"}...]
nlohmann::json class_json(const WeylGroup& g, const QClass& x);
QClass class_from_json(const WeylGroup& g, const nlohmann::json& j);

nlohmann::json lift_json(const RootSystem& rs, const PWLift& l);

std::string render_grading_table(const WeylGroup& g, const GradingTable& t, Format f);

}  // namespace qcoh
