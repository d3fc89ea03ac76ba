#pragma once

namespace lowcore::cli {

// Exit codes: 0 success, 1 usage or I/O error, 2 audit failure.
int run(int argc, char** argv);

}  // namespace lowcore::cli
