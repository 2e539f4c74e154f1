#include "meanratio/types.hpp"

#include "meanratio/bounds.hpp"

namespace meanratio {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::RelativeToAM:
      return "am";
    case Mode::RelativeToGM:
      return "gm";
  }
  return "?";
}

std::string_view to_string(Formula formula) {
  switch (formula) {
    case Formula::Xia1:
      return "xia1";
    case Formula::Xia2:
      return "xia2";
    case Formula::Tung1:
      return "tung1";
    case Formula::Tung2:
      return "tung2";
    case Formula::TungGap:
      return "tung_gap";
    case Formula::ObjectiveF:
      return "objective_f";
    case Formula::ObjectiveG:
      return "objective_g";
  }
  return "?";
}

double Completion::ratio() const { return mean_ratio(values); }

}  // namespace meanratio
