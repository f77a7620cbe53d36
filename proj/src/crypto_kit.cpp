#include "stampgate/crypto_kit.hpp"

#include <sodium.h>

#include <cstring>
#include <stdexcept>

#include "stampgate/error.hpp"

namespace stampgate::crypto {
namespace {

void ensure_sodium() {
    static const bool ready = [] { return sodium_init() >= 0; }();
    if (!ready) throw std::runtime_error("libsodium initialisation failed");
}

Key256 hmac(const Key256& key, ByteView message) {
    Key256 out{};
    crypto_auth_hmacsha256_state st;
    crypto_auth_hmacsha256_init(&st, key.data(), key.size());
    crypto_auth_hmacsha256_update(&st, message.data(), message.size());
    crypto_auth_hmacsha256_final(&st, out.data());
    return out;
}

constexpr std::uint8_t kNonceLabel[] = {'s', 'g', '-', 'n', 'o', 'n', 'c', 'e'};

}  // namespace

DynamicKey derive_key(const MasterKey& master, std::uint64_t seq, std::uint64_t plan_id) {
    ensure_sodium();
    Bytes input;
    input.reserve(16);
    put_be(input, seq, 8);
    put_be(input, plan_id, 8);
    return DynamicKey{hmac(master.bytes, input), seq};
}

Bytes seal(const DynamicKey& key, ByteView plaintext) {
    ensure_sodium();
    if (plaintext.empty()) {
        throw Error(Errc::InvalidArgument, "seal input must be non-empty");
    }
    Bytes nonce_input(std::begin(kNonceLabel), std::end(kNonceLabel));
    nonce_input.insert(nonce_input.end(), plaintext.begin(), plaintext.end());
    const auto synthetic = hmac(key.bytes, nonce_input);

    Bytes out(kNonceBytes + plaintext.size() + kTagBytes);
    std::memcpy(out.data(), synthetic.data(), kNonceBytes);
    unsigned long long clen = 0;
    crypto_aead_xchacha20poly1305_ietf_encrypt(out.data() + kNonceBytes, &clen, plaintext.data(),
                                               plaintext.size(), nullptr, 0, nullptr, out.data(),
                                               key.bytes.data());
    out.resize(kNonceBytes + clen);
    return out;
}

std::optional<Bytes> open(const DynamicKey& key, ByteView sealed) {
    ensure_sodium();
    if (sealed.size() <= kSealOverhead) return std::nullopt;
    Bytes out(sealed.size() - kSealOverhead);
    unsigned long long mlen = 0;
    const int rc = crypto_aead_xchacha20poly1305_ietf_decrypt(
        out.data(), &mlen, nullptr, sealed.data() + kNonceBytes, sealed.size() - kNonceBytes, nullptr,
        0, sealed.data(), key.bytes.data());
    if (rc != 0) return std::nullopt;
    out.resize(mlen);
    return out;
}

Digest digest(ByteView bytes) {
    ensure_sodium();
    Digest out{};
    crypto_hash_sha256(out.data(), bytes.data(), bytes.size());
    return out;
}

MasterKey master_key_from_seed(std::uint64_t seed, std::uint64_t index) {
    Bytes input;
    put_be(input, seed, 8);
    put_be(input, index, 8);
    const Key256 label{'s', 'g', '-', 'm', 'a', 's', 't', 'e', 'r'};
    return MasterKey{hmac(label, input)};
}

}  // namespace stampgate::crypto
