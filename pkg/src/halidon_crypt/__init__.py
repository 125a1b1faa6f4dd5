"""RSA-wrapped public-key cipher over the group ring Z_n[D_m] of a dihedral group."""

from .codec import DEFAULT_TABLE, CipherBlock, SymbolTable, custom_table, decode, encode
from .crypto import (
    PublicKey,
    RsaKeyPair,
    WrappedRoot,
    decrypt_block,
    decrypt_message,
    encrypt_block,
    encrypt_message,
    keygen,
    unwrap_root,
    wrap_root,
)
from .dihedral import (
    GroupRingElement,
    SpectralData,
    identity,
    invert,
    is_unit_element,
    multiply,
    spectral_transform,
    to_matrix,
    wrap,
)
from .errors import *  # noqa: F401,F403
from .halidon import HalidonContext, find_primitive_roots, is_primitive_root, make_context, max_index
from .modint import Residue, ext_gcd, is_unit, mod_inverse, mod_pow

__version__ = "0.1.0"
