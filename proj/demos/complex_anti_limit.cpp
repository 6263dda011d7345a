// A saw-tooth series whose branches never cross on the real line but still
// meet at a conjugate pair.

#include <antilimit/antilimit.hpp>

#include <iostream>

using namespace antilimit;

int main() {
    // partial sums x^2 on odd indices and -1 on even ones
    std::vector<Rational> terms;
    Rational prev(0);
    for (long m = 1; m <= 40; ++m) {
        Rational s = m % 2 ? Rational(m * m) : Rational(-1);
        terms.push_back(s - prev);
        prev = s;
    }
    const auto spec = SeriesSpec::explicit_terms(terms);
    auto al = assign_value(spec);
    std::cout << render_anti_limit(spec, al, Format::markdown);
}
