#!/usr/bin/env python3
"""Independent reference values for the C++ tests.

Everything here is computed from first principles in Python (hashlib, hmac,
fractions, the `cryptography` ChaCha20-Poly1305 and a hand-written HChaCha20)
and written to tests/frozen_oracles.hpp. Rerun after changing a byte layout:

    python3 tools/oracles/gen_oracles.py > tests/frozen_oracles.hpp
"""

import hashlib
import hmac
import random
import struct
from fractions import Fraction

from cryptography.hazmat.primitives.ciphers.aead import ChaCha20Poly1305


def be(v, width):
    return v.to_bytes(width, "big")


def header_bytes(plan_id, seq, payload_len, source, dest, kind):
    return be(plan_id, 8) + be(seq, 4) + be(payload_len, 4) + be(source, 4) + be(dest, 2) + be(kind, 1)


def checksum(issuer, serial):
    words = [issuer] + [(serial >> s) & 0xFFFF for s in (48, 32, 16, 0)]
    total = 0
    for w in words:
        total += w
        total = (total & 0xFFFF) + (total >> 16)
    return total


def block_duration(t, c, n):
    # Smallest whole tick D with D * n >= t * c.
    d = 0
    while d * n < t * c:
        d += 1
    return d


def derive_key(master, seq, plan_id):
    return hmac.new(master, be(seq, 8) + be(plan_id, 8), hashlib.sha256).digest()


def rotl(v, c):
    return ((v << c) & 0xFFFFFFFF) | (v >> (32 - c))


def hchacha20(key, nonce16):
    const = b"expand 32-byte k"
    st = list(struct.unpack("<4I", const)) + list(struct.unpack("<8I", key)) + list(struct.unpack("<4I", nonce16))

    def qr(a, b, c, d):
        st[a] = (st[a] + st[b]) & 0xFFFFFFFF; st[d] = rotl(st[d] ^ st[a], 16)
        st[c] = (st[c] + st[d]) & 0xFFFFFFFF; st[b] = rotl(st[b] ^ st[c], 12)
        st[a] = (st[a] + st[b]) & 0xFFFFFFFF; st[d] = rotl(st[d] ^ st[a], 8)
        st[c] = (st[c] + st[d]) & 0xFFFFFFFF; st[b] = rotl(st[b] ^ st[c], 7)

    for _ in range(10):
        qr(0, 4, 8, 12); qr(1, 5, 9, 13); qr(2, 6, 10, 14); qr(3, 7, 11, 15)
        qr(0, 5, 10, 15); qr(1, 6, 11, 12); qr(2, 7, 8, 13); qr(3, 4, 9, 14)
    return struct.pack("<8I", *(st[0:4] + st[12:16]))


def seal(key, plaintext):
    nonce = hmac.new(key, b"sg-nonce" + plaintext, hashlib.sha256).digest()[:24]
    sub = hchacha20(key, nonce[:16])
    ct = ChaCha20Poly1305(sub).encrypt(b"\0\0\0\0" + nonce[16:], plaintext, None)
    return nonce + ct


def cxx_bytes(b):
    return "{" + ", ".join(f"0x{x:02x}" for x in b) + "}"


def main():
    out = []
    w = out.append
    w("// Generated by tools/oracles/gen_oracles.py. Do not edit by hand.")
    w("#pragma once")
    w("")
    w("#include <array>")
    w("#include <cstdint>")
    w("")
    w("namespace oracle {")
    w("")

    hdr = dict(plan_id=0x0102030405060708, seq=0x0A0B0C0D, payload_len=1000, source=0xC0A80001, dest=3, kind=1)
    hb = header_bytes(**hdr)
    w(f"inline constexpr std::array<std::uint8_t, {len(hb)}> kHeaderBytes{cxx_bytes(hb)};")
    w(f"inline constexpr std::array<std::uint8_t, 32> kHeaderDigest{cxx_bytes(hashlib.sha256(hb).digest())};")
    w("")

    w("struct ChecksumCase { std::uint16_t issuer; std::uint64_t serial; std::uint16_t checksum; };")
    cases = [(0, 0), (1, 1000), (0xFFFF, 0xFFFFFFFFFFFFFFFF), (0x1234, 0x0123456789ABCDEF), (0x8000, 0x8000800080008000)]
    w("inline constexpr ChecksumCase kChecksums[] = {")
    for i, s in cases:
        w(f"    {{0x{i:04x}, 0x{s:016x}ULL, 0x{checksum(i, s):04x}}},")
    w("};")
    w("")

    rng = random.Random(20240611)
    sweep = []
    for n in (1, 2, 3, 7, 100):
        for c in (0, n):
            sweep.append((10, c, n))
    while len(sweep) < 1000:
        n = rng.randint(1, 5000)
        c = rng.randint(0, n)
        t = rng.randint(0, 1000)
        sweep.append((t, c, n))
    w("struct BlockCase { std::uint64_t t, c, n, d; };")
    w("inline constexpr BlockCase kBlockDurations[] = {")
    for t, c, n in sweep:
        d = block_duration(t, c, n)
        assert d == -(-Fraction(t * c, n).numerator // Fraction(t * c, n).denominator)
        w(f"    {{{t}, {c}, {n}, {d}}},")
    w("};")
    w("")

    master = bytes(range(32))
    key = derive_key(master, 7, 3)
    w(f"inline constexpr std::array<std::uint8_t, 32> kMaster{cxx_bytes(master)};")
    w(f"inline constexpr std::array<std::uint8_t, 32> kDerived_7_3{cxx_bytes(key)};")
    sealed = seal(key, b"stampgate")
    w(f"inline constexpr std::array<std::uint8_t, {len(sealed)}> kSealed_stampgate{cxx_bytes(sealed)};")
    label = b"sg-master".ljust(32, b"\0")
    mk = hmac.new(label, be(1, 8) + be(1, 8), hashlib.sha256).digest()
    w(f"inline constexpr std::array<std::uint8_t, 32> kMasterFromSeed_1_1{cxx_bytes(mk)};")
    w("")

    # Closed forms on small exact inputs.
    w(f"inline constexpr std::uint64_t kCapacity_1200_12 = {1200 // 12};")
    w(f"inline constexpr std::uint64_t kFloodT_50_50_4_1 = {int(Fraction(50 * 4 + 50 * 4))};")
    w(f"inline constexpr std::uint64_t kShare_I4_N100 = {int(Fraction(100, 4))};")
    w(f"inline constexpr std::uint64_t kSaved_1000_5_1 = {1000 * (5 - 1)};")
    # Expected share of wrong checksums that still verify: exactly one value in 2^16 matches.
    w(f"inline constexpr double kChecksumPassRate = {float(Fraction(1, 2**16))!r};")
    w("")
    w("}  // namespace oracle")
    print("\n".join(out))


if __name__ == "__main__":
    main()
