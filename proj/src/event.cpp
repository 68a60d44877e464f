#include "coevolve/event.hpp"

namespace coevolve {

char kind_code(EventKind kind) { return kind == EventKind::Retweet ? 'R' : 'L'; }

}  // namespace coevolve
