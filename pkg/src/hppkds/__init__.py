"""Signatures over dual hidden rings, with a toy-scale cryptanalysis lab."""

from .bigmod import BarrettCtx, barrett_mu, barrett_mulmod, barrett_quotient, mod_inverse
from .codec import (decode_private, decode_public, decode_signature, encode_private,
                    encode_public, encode_signature)
from .errors import HppkError
from .keygen import PrivateKey, PublicKey, derive_public, generate_keypair
from .params import ParameterSet, custom_params, hash_to_segments, standard_params, toy_params
from .polyring import BaseGrid, CoeffGrid, FieldPoly
from .signer import Signature, sign, sign_segment
from .verifier import embedded_coeffs, verify, verify_segment

__version__ = "0.1.0"
