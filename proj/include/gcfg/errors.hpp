#pragma once

#include <stdexcept>
#include <string>

namespace gcfg {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define GCFG_DEFINE_ERROR(Name)                                       \
    struct Name : Error {                                             \
        explicit Name(const std::string& msg) : Error(msg) {}         \
    }

// matroid / configuration
GCFG_DEFINE_ERROR(InvalidVector);
GCFG_DEFINE_ERROR(UnknownPoint);
GCFG_DEFINE_ERROR(IncompleteConfig);

// functional instances / reconstruction
GCFG_DEFINE_ERROR(MissingTable);
GCFG_DEFINE_ERROR(SortMismatch);
GCFG_DEFINE_ERROR(ClosureEscape);
GCFG_DEFINE_ERROR(AnchorOutOfSort);
GCFG_DEFINE_ERROR(PreconditionFailure);

// quadrangles
GCFG_DEFINE_ERROR(FiberNotBijective);
GCFG_DEFINE_ERROR(AxiomFailure);

// generators
GCFG_DEFINE_ERROR(UnknownSpec);
GCFG_DEFINE_ERROR(NotTransitive);
GCFG_DEFINE_ERROR(NotAbelian);
GCFG_DEFINE_ERROR(InvalidParams);

// interval gluing
GCFG_DEFINE_ERROR(NonPositive);
GCFG_DEFINE_ERROR(OutOfDomain);

// group oracle
GCFG_DEFINE_ERROR(InvalidTable);
GCFG_DEFINE_ERROR(SizeLimit);

// instance files
GCFG_DEFINE_ERROR(SchemaError);

#undef GCFG_DEFINE_ERROR

} // namespace gcfg
