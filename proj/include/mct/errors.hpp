#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mct {

enum class Err {
    MissingEdge,
    DuplicateEdge,
    ColorOutOfRange,
    BadVertex,
    BadN,
    BadK,
    BadM,
    NotPrime,
    NotEven,
    NotConnected,
    EmptyComponent,
    TooLarge,
    Parse,
    Io,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(Err kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
    Err kind() const { return kind_; }

private:
    Err kind_;
};

inline const char* err_name(Err e) {
    switch (e) {
        case Err::MissingEdge: return "MissingEdge";
        case Err::DuplicateEdge: return "DuplicateEdge";
        case Err::ColorOutOfRange: return "ColorOutOfRange";
        case Err::BadVertex: return "BadVertex";
        case Err::BadN: return "BadN";
        case Err::BadK: return "BadK";
        case Err::BadM: return "BadM";
        case Err::NotPrime: return "NotPrime";
        case Err::NotEven: return "NotEven";
        case Err::NotConnected: return "NotConnected";
        case Err::EmptyComponent: return "EmptyComponent";
        case Err::TooLarge: return "TooLarge";
        case Err::Parse: return "Parse";
        case Err::Io: return "Io";
        case Err::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace mct
