#pragma once

#include <json.hpp>

#include "quiver/diagram.hpp"
#include "quiver/error.hpp"
#include "quiver/factor_sequence.hpp"
#include "quiver/fomin.hpp"
#include "quiver/partition.hpp"
#include "quiver/tableau.hpp"
#include "quiver/tensor.hpp"

namespace quiver::json_io {

using nlohmann::json;

/// Raised for structurally malformed input documents.
class MalformedInput : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

json to_json(const Partition& p);
json to_json(const TensorElement& e);
json to_json(const Tableau& t);
json to_json(const RectTableau& t);
json to_json(const RankConditions& rc);
json to_json(const RectDiagram& rd);
json to_json(const TableauDiagram& td);
json to_json(const FactorSequence& fs);
json to_json(const WeakRowDiagram& d);
json to_json(const Census& c);

Partition partition_from(const json& j);
TensorElement tensor_from(const json& j, std::size_t arity);
Tableau tableau_from(const json& j);
RectTableau rect_tableau_from(const json& j);
RankConditions rank_from(const json& j);
/// Throws InvalidRankConditions when the rectangles violate the diagram relations.
RectDiagram rect_diagram_from(const json& j);
TableauDiagram tableau_diagram_from(const json& j);
FactorSequence factor_sequence_from(const json& j);
WeakRowDiagram weak_row_diagram_from(const json& j);

struct PairFile {
    Tableau q;
    Tableau p;
    int a = 0;
};
PairFile pair_from(const json& j);

/// Reads and parses a JSON document; throws MalformedInput on I/O or syntax errors.
json read_file(const std::string& path);

}  // namespace quiver::json_io
