#pragma once

#include <string>
#include <vector>

namespace bispectra {

// Integer partition, parts weakly decreasing and positive.
struct Partition {
	std::vector<long> parts;

	Partition() = default;
	explicit Partition(std::vector<long> p) : parts(std::move(p)) {}

	long weight() const
	{
		long w = 0;
		for (long p : parts)
			w += p;
		return w;
	}
	long length() const { return (long)parts.size(); }
	long part(long i) const { return i < length() ? parts[i] : 0; }

	Partition conjugate() const
	{
		Partition c;
		if (parts.empty())
			return c;
		for (long i = 1; i <= parts[0]; ++i) {
			long cnt = 0;
			for (long p : parts)
				if (p >= i)
					++cnt;
			c.parts.push_back(cnt);
		}
		return c;
	}

	std::string str() const
	{
		std::string s = "(";
		for (size_t i = 0; i < parts.size(); ++i)
			s += (i ? "," : "") + std::to_string(parts[i]);
		return s + ")";
	}

	friend bool operator==(const Partition &a, const Partition &b)
	{
		return a.parts == b.parts;
	}
	friend bool operator<(const Partition &a, const Partition &b)
	{
		return a.parts < b.parts;
	}
};

inline void enum_partitions_of(long n, long max_part, std::vector<long> &cur,
                               std::vector<Partition> &out)
{
	if (n == 0) {
		out.push_back(Partition(cur));
		return;
	}
	for (long p = std::min(n, max_part); p >= 1; --p) {
		cur.push_back(p);
		enum_partitions_of(n - p, p, cur, out);
		cur.pop_back();
	}
}

inline std::vector<Partition> partitions_of(long n)
{
	std::vector<Partition> out;
	std::vector<long> cur;
	enum_partitions_of(n, n, cur, out);
	return out;
}

// all partitions with weight in [0, cap], the empty partition first
inline std::vector<Partition> partitions_up_to(long cap)
{
	std::vector<Partition> out;
	for (long n = 0; n <= cap; ++n) {
		auto pn = partitions_of(n);
		out.insert(out.end(), pn.begin(), pn.end());
	}
	return out;
}

} // namespace bispectra
