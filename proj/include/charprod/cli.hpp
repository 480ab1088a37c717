#pragma once

namespace charprod {

/// Exit codes: 0 when every check passes, 1 on a verification failure,
/// 2 on usage errors and rejected inputs.
int cli_main(int argc, char** argv);

}  // namespace charprod
