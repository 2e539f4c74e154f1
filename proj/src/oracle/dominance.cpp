#include "meanratio/oracle.hpp"

namespace meanratio::oracle {

std::vector<DominanceRecord> dominance_grid(std::size_t n, Mode mode,
                                            double r1,
                                            const std::vector<double>& r2_grid) {
  std::vector<DominanceRecord> records;
  records.reserve(r2_grid.size());
  for (double r2 : r2_grid) {
    DominanceRecord rec{.r2 = r2};
    try {
      rec.xia = xia_bound(KnownRatios{.n = n, .mode = mode, .ratios = {r1, r2}})
                    .value;
    } catch (const FeasibilityError&) {
    }
    try {
      rec.tung = (mode == Mode::RelativeToAM ? tung_bound_am(n, r1, r2)
                                             : tung_bound_gm(n, r1, r2))
                     .value;
    } catch (const FeasibilityError&) {
    }
    rec.domain_ok = rec.xia.has_value() && rec.tung.has_value();
    if (rec.domain_ok) rec.margin = *rec.tung - *rec.xia;
    records.push_back(rec);
  }
  return records;
}

}  // namespace meanratio::oracle
