#include "iamod/units.hpp"

namespace iamod {

namespace {

constexpr double kMile = 1609.344;  // m
constexpr double kTonne = 1000.0;   // kg

struct Entry {
    const char* name;
    double factor;
};

// clang-format off
const Entry kLength[] = {{"m", 1.0}, {"km", 1000.0}, {"mi", kMile}, {"mile", kMile}, {"ft", 0.3048}};
const Entry kSpeed[] = {{"m/s", 1.0}, {"mps", 1.0}, {"km/h", 1000.0 / 3600.0}, {"kph", 1000.0 / 3600.0}, {"mph", kMile / 3600.0}};
const Entry kDuration[] = {{"s", 1.0}, {"sec", 1.0}, {"min", 60.0}, {"h", 3600.0}};
const Entry kFrequency[] = {{"1/s", 1.0}, {"1/min", 1.0 / 60.0}, {"1/h", 1.0 / 3600.0}, {"veh/s", 1.0}, {"veh/min", 1.0 / 60.0}, {"veh/h", 1.0 / 3600.0}};
const Entry kMoney[] = {{"USD", 1.0}};
const Entry kMoneyPerLength[] = {{"USD/m", 1.0}, {"USD/km", 1.0 / 1000.0}, {"USD/mi", 1.0 / kMile}, {"USD/mile", 1.0 / kMile}};
const Entry kMoneyPerYear[] = {{"USD/yr", 1.0}, {"USD/year", 1.0}};
const Entry kMoneyPerMass[] = {{"USD/kg", 1.0}, {"USD/t", 1.0 / kTonne}};
const Entry kMassPerEnergy[] = {{"kg/J", 1.0}, {"kg/kJ", 1.0 / 1000.0}, {"g/J", 1.0 / 1000.0}, {"g/kJ", 1.0 / 1.0e6}};
const Entry kMassPerYear[] = {{"kg/yr", 1.0}, {"kg/year", 1.0}, {"t/yr", kTonne}, {"t/year", kTonne}};
const Entry kEnergyPerLength[] = {{"J/m", 1.0}, {"kJ/m", 1000.0}, {"kJ/km", 1.0}, {"Wh/km", 3.6}, {"kWh/km", 3600.0}};
// clang-format on

template <std::size_t N>
double lookup(const Entry (&table)[N], Dimension dim, const std::string& unit) {
    for (const auto& e : table)
        if (unit == e.name) return e.factor;
    throw UnitError("unknown unit '" + unit + "' (expected a " + si_unit(dim) +
                    "-dimensioned unit)");
}

}  // namespace

double unit_factor(Dimension dim, const std::string& unit) {
    switch (dim) {
        case Dimension::Length: return lookup(kLength, dim, unit);
        case Dimension::Speed: return lookup(kSpeed, dim, unit);
        case Dimension::Duration: return lookup(kDuration, dim, unit);
        case Dimension::Frequency: return lookup(kFrequency, dim, unit);
        case Dimension::Money: return lookup(kMoney, dim, unit);
        case Dimension::MoneyPerLength: return lookup(kMoneyPerLength, dim, unit);
        case Dimension::MoneyPerYear: return lookup(kMoneyPerYear, dim, unit);
        case Dimension::MoneyPerMass: return lookup(kMoneyPerMass, dim, unit);
        case Dimension::MassPerEnergy: return lookup(kMassPerEnergy, dim, unit);
        case Dimension::MassPerYear: return lookup(kMassPerYear, dim, unit);
        case Dimension::EnergyPerLength: return lookup(kEnergyPerLength, dim, unit);
    }
    throw UnitError("unknown dimension");
}

const char* si_unit(Dimension dim) {
    switch (dim) {
        case Dimension::Length: return "m";
        case Dimension::Speed: return "m/s";
        case Dimension::Duration: return "s";
        case Dimension::Frequency: return "1/s";
        case Dimension::Money: return "USD";
        case Dimension::MoneyPerLength: return "USD/m";
        case Dimension::MoneyPerYear: return "USD/year";
        case Dimension::MoneyPerMass: return "USD/kg";
        case Dimension::MassPerEnergy: return "kg/J";
        case Dimension::MassPerYear: return "kg/year";
        case Dimension::EnergyPerLength: return "J/m";
    }
    return "?";
}

}  // namespace iamod
