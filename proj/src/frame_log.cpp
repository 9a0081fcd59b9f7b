#include "canwb/frame_log.hpp"

#include "canwb/error.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace canwb {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

} // namespace

std::string format_log_line(const LogEvent& ev) {
    char head[64];
    std::snprintf(head, sizeof(head), "%.9f %03X %u ", ev.frame.timestamp,
                  ev.frame.id, static_cast<unsigned>(ev.frame.dlc()));
    std::string line = head;
    if (ev.frame.payload.empty()) {
        line += '-';
    } else {
        static const char* digits = "0123456789ABCDEF";
        for (const std::uint8_t b : ev.frame.payload) {
            line += digits[b >> 4];
            line += digits[b & 0xF];
        }
    }
    line += ' ';
    line += ev.sender;
    line += ev.spoofed ? " 1" : " 0";
    return line;
}

LogEvent parse_log_line(const std::string& line) {
    std::istringstream in(line);
    double t;
    std::string id_s, payload_s, sender, spoofed_s;
    unsigned dlc;
    if (!(in >> t >> id_s >> dlc >> payload_s >> sender >> spoofed_s)) {
        throw InvalidInput("malformed log line: " + line);
    }
    LogEvent ev;
    ev.frame.timestamp = t;
    unsigned id = 0;
    for (const char c : id_s) {
        const int d = hex_digit(c);
        if (d < 0) throw InvalidInput("malformed log line: " + line);
        id = (id << 4) | static_cast<unsigned>(d);
    }
    ev.frame.id = static_cast<std::uint16_t>(id);
    if (payload_s != "-") {
        if (payload_s.size() % 2 != 0) throw InvalidInput("malformed log line: " + line);
        for (std::size_t i = 0; i < payload_s.size(); i += 2) {
            const int hi = hex_digit(payload_s[i]);
            const int lo = hex_digit(payload_s[i + 1]);
            if (hi < 0 || lo < 0) throw InvalidInput("malformed log line: " + line);
            ev.frame.payload.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
        }
    }
    if (dlc != ev.frame.payload.size()) throw InvalidInput("malformed log line: " + line);
    ev.sender = sender;
    if (spoofed_s == "0") {
        ev.spoofed = false;
    } else if (spoofed_s == "1") {
        ev.spoofed = true;
    } else {
        throw InvalidInput("malformed log line: " + line);
    }
    ev.frame.validate();
    return ev;
}

void write_frame_log(std::ostream& os, const std::vector<LogEvent>& events) {
    os << "# t id dlc payload sender spoofed\n";
    for (const auto& ev : events) os << format_log_line(ev) << '\n';
}

std::vector<LogEvent> read_frame_log(std::istream& is) {
    std::vector<LogEvent> events;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        events.push_back(parse_log_line(line));
    }
    return events;
}

void write_frame_log_file(const std::string& path, const std::vector<LogEvent>& events) {
    std::ofstream os(path);
    if (!os) throw InvalidInput("cannot open for writing: " + path);
    write_frame_log(os, events);
}

std::vector<LogEvent> read_frame_log_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw InvalidInput("cannot open: " + path);
    return read_frame_log(is);
}

} // namespace canwb
