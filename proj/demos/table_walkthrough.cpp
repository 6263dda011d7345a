// Walks through the first few eta rows: partial sums, the two fitted
// branches, where they meet and the value there.

#include <antilimit/antilimit.hpp>

#include <iostream>

using namespace antilimit;

int main() {
    for (long s = -1; s >= -4; --s) {
        const auto spec = SeriesSpec::eta(s);
        auto sums = partial_sums(spec, 8).values;
        std::cout << to_string(spec) << "\n  S_1..S_8:";
        for (const auto& v : sums)
            std::cout << ' ' << v.to_string();
        auto pair = characterize(spec);
        auto al = intersect(pair);
        std::cout << "\n  P_o(x) = " << to_string(pair.p_odd) << "\n  P_e(x) = " << to_string(pair.p_even)
                  << "\n  meet at X = " << root_text(*al.first_intersection, 12) << ", value " << al.value->to_string()
                  << "\n";
    }
}
