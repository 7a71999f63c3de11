#include "cinder/lobby.hpp"

namespace cinder {

Lobby clamp_lobby(Lobby lobby, const RatingConfig& config) {
  for (double& rank : lobby.ranks) rank = clamp_rating(rank, config);
  return lobby;
}

}  // namespace cinder
