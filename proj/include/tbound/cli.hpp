#pragma once

namespace tbound {

/// Command-line entry point. Returns 0 on success, 1 when a checked property fails,
/// 2 on a usage error.
int cli_main(int argc, char** argv);

}  // namespace tbound
