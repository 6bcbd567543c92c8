// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#include <edublock/error.hpp>
#include <edublock/hash.hpp>

#include <openssl/evp.h>

namespace edublock
{
struct Sha256::Impl
{
    EVP_MD_CTX* ctx = nullptr;
};

Sha256::Sha256() : impl_{std::make_unique<Impl>()}
{
    impl_->ctx = EVP_MD_CTX_new();
    if (impl_->ctx == nullptr || EVP_DigestInit_ex(impl_->ctx, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error{"EVP sha256 init failed"};
}

Sha256::~Sha256()
{
    EVP_MD_CTX_free(impl_->ctx);
}

Sha256& Sha256::update(ByteView data)
{
    if (EVP_DigestUpdate(impl_->ctx, data.data(), data.size()) != 1)
        throw std::runtime_error{"EVP sha256 update failed"};
    return *this;
}

Hash256 Sha256::finish()
{
    Hash256 out;
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(impl_->ctx, out.bytes.data(), &len) != 1 || len != out.bytes.size())
        throw std::runtime_error{"EVP sha256 final failed"};
    EVP_DigestInit_ex(impl_->ctx, EVP_sha256(), nullptr);
    return out;
}

Hash256 sha256(ByteView data)
{
    Hash256 out;
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.bytes.data(), &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error{"EVP sha256 failed"};
    return out;
}

Address named_address(std::string_view label)
{
    const auto digest = sha256(label);
    Address out;
    std::copy(digest.bytes.end() - Address::size, digest.bytes.end(), out.bytes.begin());
    return out;
}
}  // namespace edublock
