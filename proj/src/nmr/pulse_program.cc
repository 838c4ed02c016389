// Copyright 2026 The QCSim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcs/nmr/pulse_program.h"

#include <charconv>
#include <cmath>
#include <sstream>

namespace qcs::nmr {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string &token, int line_no) {
    double v = 0.0;
    auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc() || res.ptr != token.data() + token.size() || !std::isfinite(v)) {
        throw std::invalid_argument("pulse program line " + std::to_string(line_no) + ": bad number '" + token + "'");
    }
    return v;
}

int parse_label(const std::string &token, int line_no) {
    int v = 0;
    auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc() || res.ptr != token.data() + token.size() || v < 1 || v > kMaxQubits) {
        throw std::invalid_argument("pulse program line " + std::to_string(line_no) + ": bad spin label '" + token + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<QubitIndex> parse_targets(const std::string &token, int line_no) {
    std::vector<QubitIndex> out;
    for (const auto &part : split(token, ',')) {
        out.push_back(QubitIndex::label(parse_label(part, line_no)));
    }
    return out;
}

}  // namespace

std::string to_string(PulseAxis axis) {
    switch (axis) {
        case PulseAxis::kX:
            return "x";
        case PulseAxis::kY:
            return "y";
        case PulseAxis::kMinusX:
            return "-x";
        case PulseAxis::kMinusY:
            return "-y";
    }
    return "?";
}

PulseAxis parse_axis(const std::string &text) {
    if (text == "x") return PulseAxis::kX;
    if (text == "y") return PulseAxis::kY;
    if (text == "-x") return PulseAxis::kMinusX;
    if (text == "-y") return PulseAxis::kMinusY;
    throw std::invalid_argument("unknown pulse axis '" + text + "'");
}

PulseProgram &PulseProgram::add(PulseStep step) {
    std::visit(overloaded{
                   [](const RfPulse &p) {
                       if (p.targets.empty()) {
                           throw std::invalid_argument("pulse needs at least one target");
                       }
                       if (!std::isfinite(p.angle)) {
                           throw std::invalid_argument("pulse angle must be finite");
                       }
                   },
                   [](const Delay &d) {
                       if (!(d.duration >= 0.0) || !std::isfinite(d.duration)) {
                           throw std::invalid_argument("delay duration must be finite and non-negative");
                       }
                   },
                   [](const ZRotation &z) {
                       if (!std::isfinite(z.angle)) {
                           throw std::invalid_argument("z rotation angle must be finite");
                       }
                   },
                   [](const Gradient &) {},
               },
               step);
    steps_.push_back(std::move(step));
    return *this;
}

PulseProgram &PulseProgram::append(const PulseProgram &other) {
    steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
    return *this;
}

double PulseProgram::total_delay() const {
    double t = 0.0;
    for (const auto &s : steps_) {
        if (const auto *d = std::get_if<Delay>(&s)) {
            t += d->duration;
        }
    }
    return t;
}

double PulseProgram::delay_for_coupling(QubitIndex a, QubitIndex b) const {
    double t = 0.0;
    for (const auto &s : steps_) {
        if (const auto *d = std::get_if<Delay>(&s)) {
            for (const auto &[x, y] : d->active_couplings) {
                if ((x == a && y == b) || (x == b && y == a)) {
                    t += d->duration;
                    break;
                }
            }
        }
    }
    return t;
}

bool PulseProgram::has_gradient() const {
    for (const auto &s : steps_) {
        if (std::holds_alternative<Gradient>(s)) {
            return true;
        }
    }
    return false;
}

std::string PulseProgram::to_text() const {
    std::ostringstream out;
    for (const auto &s : steps_) {
        std::visit(overloaded{
                       [&](const RfPulse &p) {
                           out << "PULSE ";
                           for (std::size_t i = 0; i < p.targets.size(); ++i) {
                               out << (i ? "," : "") << p.targets[i].one_based();
                           }
                           out << ' ' << to_string(p.axis) << ' ' << format_double(p.angle);
                       },
                       [&](const Delay &d) {
                           out << "DELAY " << format_double(d.duration) << " COUPLINGS=";
                           for (std::size_t i = 0; i < d.active_couplings.size(); ++i) {
                               out << (i ? ";" : "") << d.active_couplings[i].first.one_based() << ','
                                   << d.active_couplings[i].second.one_based();
                           }
                       },
                       [&](const ZRotation &z) {
                           out << "ZROT " << z.target.one_based() << ' ' << format_double(z.angle);
                       },
                       [&](const Gradient &) { out << "GRAD"; },
                   },
                   s);
        out << '\n';
    }
    return out.str();
}

PulseProgram PulseProgram::parse(const std::string &text) {
    PulseProgram program;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream words(line);
        std::vector<std::string> tok;
        for (std::string w; words >> w;) {
            tok.push_back(w);
        }
        if (tok.empty()) {
            continue;
        }
        auto expect = [&](std::size_t count) {
            if (tok.size() != count) {
                throw std::invalid_argument("pulse program line " + std::to_string(line_no) + ": " + tok[0] +
                                            " expects " + std::to_string(count - 1) + " fields");
            }
        };
        if (tok[0] == "PULSE") {
            expect(4);
            program.add(RfPulse{parse_targets(tok[1], line_no), parse_axis(tok[2]), parse_double(tok[3], line_no)});
        } else if (tok[0] == "DELAY") {
            expect(3);
            const std::string prefix = "COUPLINGS=";
            if (tok[2].rfind(prefix, 0) != 0) {
                throw std::invalid_argument("pulse program line " + std::to_string(line_no) + ": missing COUPLINGS=");
            }
            Delay d{parse_double(tok[1], line_no), {}};
            std::string list = tok[2].substr(prefix.size());
            if (!list.empty()) {
                for (const auto &pair : split(list, ';')) {
                    auto ends = parse_targets(pair, line_no);
                    if (ends.size() != 2 || ends[0] == ends[1]) {
                        throw std::invalid_argument("pulse program line " + std::to_string(line_no) +
                                                    ": coupling must name two distinct spins");
                    }
                    d.active_couplings.emplace_back(ends[0], ends[1]);
                }
            }
            program.add(d);
        } else if (tok[0] == "ZROT") {
            expect(3);
            program.add(ZRotation{QubitIndex::label(parse_label(tok[1], line_no)), parse_double(tok[2], line_no)});
        } else if (tok[0] == "GRAD") {
            expect(1);
            program.add(Gradient{});
        } else {
            throw std::invalid_argument("pulse program line " + std::to_string(line_no) + ": unknown step '" + tok[0] + "'");
        }
    }
    return program;
}

}  // namespace qcs::nmr
