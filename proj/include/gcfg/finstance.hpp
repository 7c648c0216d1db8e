#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gcfg/bijection.hpp"
#include "gcfg/configuration.hpp"  // Role
#include "gcfg/errors.hpp"

namespace gcfg {

/// A finite sort: named, nonempty, distinct atom ids in a fixed order.
struct Sort {
    std::string name;
    std::vector<std::string> elems;
    std::unordered_map<std::string, int> index;

    Sort() = default;
    Sort(std::string name_, std::vector<std::string> elems_);
    int at(const std::string& id) const;  // SchemaError if unknown
    size_t size() const { return elems.size(); }
};

enum class TableKind { F, L, H, K, R, S };
constexpr std::array<TableKind, 6> kAllTables = {TableKind::F, TableKind::L, TableKind::H,
                                                 TableKind::K, TableKind::R, TableKind::S};
const char* table_name(TableKind t);

/// Extensional relation table over three sorts; triples are element
/// indices, kept sorted lexicographically.
struct RelTable {
    TableKind kind;
    int s1 = -1, s2 = -1, s3 = -1;  // sort indices inside the owning instance
    std::vector<std::array<int, 3>> triples;
};

/// Dense functional view of a validated RelTable: val[u][v].
struct DenseFn {
    int n1 = 0, n2 = 0;
    std::vector<int> val;
    int operator()(int u, int v) const { return val[static_cast<size_t>(u) * n2 + v]; }
};

/// The functional semantics of a configuration: six (or seven) sorts, the
/// tables F:(a2,a1)->a3, L:(a1,x2)->x3, H:(a3,x2)->x1, K:(a2,x3)->x1 and,
/// for the abelian extension, R:(a1,x4)->x1, S:(a2,x2)->x4.
class FunctionalInstance {
public:
    /// roles maps every role (x4 optional) to a sort index in `sorts`.
    FunctionalInstance(std::vector<Sort> sorts, std::array<int, 7> role_sort);

    void set_table(TableKind kind, std::vector<std::array<int, 3>> triples);
    void set_designated(Role r, const std::string& elem_id);

    const std::vector<Sort>& sorts() const { return sorts_; }
    const Sort& sort_of(Role r) const;
    int sort_index_of(Role r) const { return role_sort_[static_cast<int>(r)]; }
    bool has_x4() const { return role_sort_[static_cast<int>(Role::x4)] >= 0; }
    bool has_table(TableKind t) const { return tables_[static_cast<int>(t)].has_value(); }
    bool has_abelian_tables() const { return has_table(TableKind::R) && has_table(TableKind::S); }
    const RelTable& table(TableKind t) const;  // MissingTable
    /// Designated element index for a role, or -1.
    int designated(Role r) const { return designated_[static_cast<int>(r)]; }
    bool has_designated() const;
    std::string designated_id(Role r) const;

    /// The (arg1, arg2, value) sort indices a table must have.
    std::array<int, 3> table_signature(TableKind t) const;

    /// Functional read of a table; throws MissingTable, and
    /// PreconditionFailure if the table is not the graph of per-row maps.
    DenseFn function(TableKind t) const;

private:
    std::vector<Sort> sorts_;
    std::array<int, 7> role_sort_;
    std::array<std::optional<RelTable>, 6> tables_;
    std::array<int, 7> designated_;
};

struct TableCondition {
    std::string table;
    std::string condition;  // "rows_bijective", "projections_surjective"
    bool pass = true;
    std::string witness;
};

struct ValidityReport {
    std::vector<TableCondition> conditions;
    /// Per table: whether every (arg2, value) pair is realised by some arg1.
    std::vector<std::pair<std::string, bool>> pair_complete;
    bool pass = true;
};

/// Checks, for every table present, that each row is the graph of a
/// bijection and that all three coordinate projections are surjective.
ValidityReport validate_tables(const FunctionalInstance& inst);

struct EquationWitness {
    std::array<std::string, 3> point;  // (a2, a1, x2) element ids
    std::vector<std::string> values;   // the computed sides, in report order
};

struct EquationReport {
    bool holds = true;
    long long checked = 0;
    std::optional<EquationWitness> witness;
};

/// H(F(a2,a1),x2) = K(a2,L(a1,x2)) over the whole product; first
/// counterexample in lexicographic (a2,a1,x2) order.
EquationReport check_master_equation(const FunctionalInstance& inst);

/// H(F(a2,a1),x2) = R(a1,S(a2,x2)) = K(a2,L(a1,x2)).  The middle route is
/// the added-node factorisation; the third route's inner map is always the
/// L table, whatever name the source data gives it.
EquationReport check_abelian_equation(const FunctionalInstance& inst);

struct Families {
    FunctionFamily L, K, H;
    std::optional<FunctionFamily> R, S;
};

/// Reads off the parameterised function families from the tables; one
/// member per parameter, duplicates retained.
Families extract_families(const FunctionalInstance& inst);

} // namespace gcfg
