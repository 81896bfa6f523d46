#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xsom {

// Base for everything thrown by the library. Two broad families: ConfigError
// maps to CLI exit code 2 (bad configuration or usage), DataError to exit
// code 3 (bad input data or model files).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

class DataError : public Error {
public:
    explicit DataError(const std::string& what) : Error(what) {}
};

class MissingLabelColumn : public DataError {
public:
    explicit MissingLabelColumn(const std::string& what) : DataError(what) {}
};

class RaggedRow : public DataError {
public:
    RaggedRow(std::size_t line, const std::string& what)
        : DataError(what), line(line) {}
    std::size_t line;
};

class UnparseableNumeric : public DataError {
public:
    UnparseableNumeric(std::size_t line, std::string column, const std::string& what)
        : DataError(what), line(line), column(std::move(column)) {}
    std::size_t line;
    std::string column;
};

class UnmappedLabel : public DataError {
public:
    explicit UnmappedLabel(const std::string& what) : DataError(what) {}
};

class UnknownFeatureName : public ConfigError {
public:
    explicit UnknownFeatureName(const std::string& what) : ConfigError(what) {}
};

class ClassWithSingleSample : public DataError {
public:
    explicit ClassWithSingleSample(const std::string& what) : DataError(what) {}
};

class DimensionMismatch : public DataError {
public:
    explicit DimensionMismatch(const std::string& what) : DataError(what) {}
};

class EmptyData : public DataError {
public:
    explicit EmptyData(const std::string& what) : DataError(what) {}
};

class MapTooSmall : public DataError {
public:
    explicit MapTooSmall(const std::string& what) : DataError(what) {}
};

class NoLabeledNeuron : public DataError {
public:
    explicit NoLabeledNeuron(const std::string& what) : DataError(what) {}
};

class InvalidParam : public ConfigError {
public:
    explicit InvalidParam(const std::string& what) : ConfigError(what) {}
};

class ZeroLocalSamples : public DataError {
public:
    explicit ZeroLocalSamples(const std::string& what) : DataError(what) {}
};

class LengthMismatch : public DataError {
public:
    explicit LengthMismatch(const std::string& what) : DataError(what) {}
};

class UnknownArtifactKind : public DataError {
public:
    explicit UnknownArtifactKind(const std::string& what) : DataError(what) {}
};

} // namespace xsom
