#pragma once

#include "gsdf/family.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace gsdf {

/// A published class representative, e.g. label "43-kkks-a".
struct CatalogEntry {
    std::string label;
    TypedFamily family;
    std::string note;
};

/// All embedded representatives for 33 <= v <= 45, parsed on first use.
const std::vector<CatalogEntry>& catalog();
/// Throws when the label is unknown.
const CatalogEntry& catalog_entry(std::string_view label);
std::vector<CatalogEntry> catalog_entries(int v, const SymmetryType& type);

enum class Verdict { yes, no, not_applicable };

std::string_view verdict_name(Verdict v);

/// One row of the existence table: a parameter set with k1 = (v-1)/2 and
/// the verdicts for ksss, kkss and kkks.
struct Table1Row {
    GsParamSet params;
    std::array<Verdict, 3> verdicts{};
};

/// The three canonical patterns in table column order.
const std::array<SymmetryType, 3>& table_types();

const std::vector<Table1Row>& table1();

} // namespace gsdf
