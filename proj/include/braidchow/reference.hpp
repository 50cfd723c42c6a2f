#pragma once

// Published Schur expansions of H_n(t) for 2 <= n <= 6.  Coefficient lists
// start at t^0.

#include <braidchow/partition.hpp>
#include <braidchow/poly.hpp>

#include <map>
#include <vector>

namespace braidchow::reference {

inline std::map<int, std::map<Partition, Poly>> published_equivariant_table() {
    return {
        {2, {{Partition{2}, Poly{1}}}},
        {3, {{Partition{3}, Poly{1, 1}}}},
        {4,
         {
             {Partition{4}, Poly{1, 3, 1}},
             {Partition{3, 1}, Poly{0, 1}},
             {Partition{2, 2}, Poly{0, 1}},
         }},
        {5,
         {
             {Partition{5}, Poly{1, 5, 5, 1}},
             {Partition{4, 1}, Poly{0, 4, 4}},
             {Partition{3, 2}, Poly{0, 3, 3}},
             {Partition{2, 2, 1}, Poly{0, 1, 1}},
         }},
        {6,
         {
             {Partition{6}, Poly{1, 9, 19, 9, 1}},
             {Partition{5, 1}, Poly{0, 7, 21, 7}},
             {Partition{4, 2}, Poly{0, 9, 28, 9}},
             {Partition{4, 1, 1}, Poly{0, 1, 7, 1}},
             {Partition{3, 3}, Poly{0, 2, 8, 2}},
             {Partition{3, 2, 1}, Poly{0, 2, 12, 2}},
             {Partition{3, 1, 1, 1}, Poly{0, 0, 1}},
             {Partition{2, 2, 2}, Poly{0, 2, 7, 2}},
             {Partition{2, 2, 1, 1}, Poly{0, 0, 1}},
         }},
    };
}

}  // namespace braidchow::reference
