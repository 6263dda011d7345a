// Grandi's series has no intersection on its own. Adding eta(-1) fixes that,
// and the known value 1/4 is then subtracted off.

#include <antilimit/antilimit.hpp>

#include <iostream>

using namespace antilimit;

int main() {
    try {
        assign_value(SeriesSpec::eta(0));
    } catch (const summability_error& e) {
        std::cout << "eta(0) alone: " << e.what() << "\n";
    }
    const auto known = SeriesSpec::eta(-1);
    const Rational known_value = exact_value(known);
    const Rational eta0 = deduce(SeriesSpec::sum(known, SeriesSpec::eta(0)), known, known_value);
    std::cout << "eta(-1) = " << known_value.to_string() << "\n";
    std::cout << "eta(0)  = " << eta0.to_string() << "\n";
    std::cout << "zeta(0) = " << oracle::eta_zeta_convert(0, oracle::EtaValue{eta0}).to_string() << "\n";
}
