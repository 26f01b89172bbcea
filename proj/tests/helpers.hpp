#pragma once

#include <ostream>

#include "qcartan/cyclotomic.hpp"
#include "qcartan/laurent.hpp"
#include "qcartan/partitions.hpp"

namespace qcartan {

inline void PrintTo(const Partition& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const LaurentPoly& f, std::ostream* os) { *os << f.to_string(); }
inline void PrintTo(const CycloProduct& c, std::ostream* os) { *os << c.to_string(); }

}  // namespace qcartan

namespace testing_helpers {

inline qcartan::Partition P(std::initializer_list<int> parts) { return qcartan::Partition::from_parts(parts); }
inline qcartan::LaurentPoly V(int e, long c = 1) { return qcartan::LaurentPoly::monomial(e, c); }
inline qcartan::CycloProduct C(std::map<long, long> f) { return qcartan::CycloProduct(std::move(f)); }

}  // namespace testing_helpers
