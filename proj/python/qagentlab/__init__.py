"""Quantum agent toolkit: statevector simulator plus three prototype agents."""

from qagentlab._core import (  # noqa: F401
    Circuit,
    EpisodeRecord,
    GrayImage,
    QieEpisodeRecord,
    bandit_train,
    circuit_unitary,
    decrypt_image,
    encrypt_image,
    grover_select,
    probabilities,
    qft_encrypt,
    qie_train,
    quantum_xor,
    read_pgm,
    sample,
    scramble_decrypt,
    scramble_encrypt,
    shannon_entropy,
    simulate,
    write_pgm,
)

__all__ = [
    "Circuit",
    "EpisodeRecord",
    "GrayImage",
    "QieEpisodeRecord",
    "bandit_train",
    "circuit_unitary",
    "decrypt_image",
    "encrypt_image",
    "grover_select",
    "probabilities",
    "qft_encrypt",
    "qie_train",
    "quantum_xor",
    "read_pgm",
    "sample",
    "scramble_decrypt",
    "scramble_encrypt",
    "shannon_entropy",
    "simulate",
    "write_pgm",
]
