#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace capsched {

using LinkId = std::int64_t;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

class InvalidParameters : public Error {
public:
	using Error::Error;
};

/// Malformed input: bad file, duplicate ids, dangling ids, non-partition schedule.
class InputError : public Error {
public:
	using Error::Error;
};

/// A link whose own signal cannot beat the noise (P_vv <= beta*N).
class InfeasibleLink : public Error {
public:
	InfeasibleLink(LinkId id, const std::string &what) : Error(what), link_(id) {}
	LinkId link() const { return link_; }

private:
	LinkId link_;
};

/// A sender placed exactly on a receiver it interferes with.
class Singularity : public Error {
public:
	using Error::Error;
};

class Unsupported : public Error {
public:
	using Error::Error;
};

class PreconditionViolated : public Error {
public:
	PreconditionViolated(std::optional<LinkId> id, const std::string &what)
		: Error(what), link_(id) {}
	std::optional<LinkId> link() const { return link_; }

private:
	std::optional<LinkId> link_;
};

class HeuristicInfeasible : public Error {
public:
	HeuristicInfeasible(LinkId id, const std::string &what) : Error(what), link_(id) {}
	LinkId link() const { return link_; }

private:
	LinkId link_;
};

class VerificationFailed : public Error {
public:
	using Error::Error;
};

class SizeLimitExceeded : public Error {
public:
	using Error::Error;
};

class Cancelled : public Error {
public:
	Cancelled() : Error("operation cancelled") {}
};

class InternalError : public Error {
public:
	using Error::Error;
};

} // namespace capsched
