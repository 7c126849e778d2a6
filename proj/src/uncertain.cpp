#include "codp/uncertain.hpp"

namespace codp {

std::string monad_name(Monad m) {
  switch (m) {
    case Monad::identity: return "identity";
    case Monad::powerset: return "powerset";
    case Monad::interval: return "interval";
    case Monad::dist: return "dist";
    case Monad::powerset_empty: return "powerset-empty";
  }
  return "?";
}

Monad monad_from_name(const std::string& name) {
  if (name == "identity") return Monad::identity;
  if (name == "powerset") return Monad::powerset;
  if (name == "interval") return Monad::interval;
  if (name == "dist") return Monad::dist;
  throw MonadMismatch("unknown monad instance '" + name + "'");
}

}  // namespace codp
