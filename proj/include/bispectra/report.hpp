#pragma once

#include <string>
#include <vector>

namespace bispectra {

// Outcome of a verification pass; failures carry exact residual data as text.
struct CheckReport {
	std::string name;
	bool passed = true;
	long checks = 0;
	std::vector<std::string> failures;
	std::vector<std::string> notes;

	void fail(const std::string &what)
	{
		passed = false;
		failures.push_back(what);
	}
	void count() { ++checks; }
	void note(const std::string &what) { notes.push_back(what); }

	void merge(const CheckReport &o)
	{
		passed = passed && o.passed;
		checks += o.checks;
		for (auto &f : o.failures)
			failures.push_back(o.name.empty() ? f : o.name + ": " + f);
		for (auto &n : o.notes)
			notes.push_back(o.name.empty() ? n : o.name + ": " + n);
	}
};

} // namespace bispectra
