#pragma once

#include <iosfwd>

#include "zh/engine/engine.h"

namespace zh::engine {

// Line-oriented UCI-style dialogue with the crazyhouse variant: handshake,
// position setup by FEN or startpos+moves (drops as "P@e4"), `go` with clock
// parameters, `stop`, `quit`. Malformed commands are answered with an
// "info string" diagnostic, never a crash.
void protocol_loop(std::istream& in, std::ostream& out, const EngineConfig& config);

}  // namespace zh::engine
