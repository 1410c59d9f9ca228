#pragma once

#include <stdexcept>
#include <string>

namespace iamod {

/// Physical dimension of a scenario quantity; fixes the SI unit the value
/// is converted into at load.
enum class Dimension {
    Length,          // -> m
    Speed,           // -> m/s
    Duration,        // -> s
    Frequency,       // -> 1/s (also demand and vehicle rates)
    Money,           // -> USD
    MoneyPerLength,  // -> USD/m
    MoneyPerYear,    // -> USD/year
    MoneyPerMass,    // -> USD/kg
    MassPerEnergy,   // -> kg/J
    MassPerYear,     // -> kg/year
    EnergyPerLength, // -> J/m
};

struct UnitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Multiplier turning one `unit` into the SI unit of `dim`; throws
/// UnitError when the unit does not belong to the dimension.
double unit_factor(Dimension dim, const std::string& unit);

/// Canonical SI unit name for error messages.
const char* si_unit(Dimension dim);

}  // namespace iamod
