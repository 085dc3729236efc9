#pragma once

#include "logdegen/providers.hpp"
#include "logdegen/splitting.hpp"

namespace logdegen {

/// JSON loaders/serializers for the documented schemas. All rationals are
/// serialized as "p/q" strings. Loaders validate and throw
/// validation_error with a message on malformed input.

TargetModel load_target(const std::string& json_text);
std::string save_target(const TargetModel& t);

std::vector<InvariantRecord> load_invariant_table(const TargetModel& t,
                                                  const std::string& json_text);

CurveGraph load_curve_graph(const std::string& json_text);
std::string save_curve_graph(const CurveGraph& g);

CurveHalf load_curve_half(const std::string& json_text);
std::string save_curve_half(const CurveHalf& h);

std::string save_decorated_graph(const DecoratedGraph& g);
std::string save_ordered_graph(const OrderedGraph& g);

std::string read_file(const std::string& path);

}  // namespace logdegen
