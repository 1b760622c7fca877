#include "adgibbs/model.hpp"

namespace adgibbs {

std::vector<double> AdaptationRule::update_gamma(const History&) {
  throw Error(ErrorKind::BadArgument, "rule does not adapt gamma");
}

}  // namespace adgibbs
