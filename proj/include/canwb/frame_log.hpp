#pragma once

#include "canwb/can_frame.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace canwb {

// One bus event as recorded in the frame log. `spoofed` is ground truth for
// evaluation only; the authentication path never consumes it.
struct LogEvent {
    CanFrame frame;       // frame.timestamp == transmission start (SOF), seconds
    std::string sender;   // actual transmitting ECU
    bool spoofed = false;
};

// Line format, one record per line:
//   <t %.9f> <id 3-digit hex> <dlc> <payload hex | -> <sender> <0|1>
// Lines starting with '#' are comments.
std::string format_log_line(const LogEvent& ev);
LogEvent parse_log_line(const std::string& line);

void write_frame_log(std::ostream& os, const std::vector<LogEvent>& events);
std::vector<LogEvent> read_frame_log(std::istream& is);

void write_frame_log_file(const std::string& path, const std::vector<LogEvent>& events);
std::vector<LogEvent> read_frame_log_file(const std::string& path);

} // namespace canwb
