"""Byte-mode QR pipeline: tables, segments, codewords, matrix, decoding."""

from .codewords import (Block, BlockDecodeFailure, CodewordSet, codewords_json,
                        decode_codewords, deinterleave, encode, from_wire,
                        wire_index, wire_order)
from .config import QrConfig
from .decode import decode_matrix, read_format
from .matrix import (FormatUnreadableError, LayoutMismatchError, ModuleMatrix,
                     apply_mask, build_matrix, data_path, decode_format_info,
                     extract_wire, format_info, function_template,
                     penalty_score)
from .render import from_pbm, to_ascii, to_pbm
from .segment import (CapacityOverflowError, DataSegment, SegmentParseError,
                      build_data_segment, parse_data_bytes)
from .tables import (BlockLayout, UnsupportedVersionError, alignment_positions,
                     block_layout, capacity, char_count_bits,
                     num_data_codewords, raw_codewords, size_for_version)

__all__ = [
    "Block", "BlockDecodeFailure", "BlockLayout", "CapacityOverflowError",
    "CodewordSet", "DataSegment", "FormatUnreadableError",
    "LayoutMismatchError", "ModuleMatrix", "QrConfig", "SegmentParseError",
    "UnsupportedVersionError", "alignment_positions", "apply_mask",
    "block_layout", "build_data_segment", "build_matrix", "capacity",
    "char_count_bits", "codewords_json", "data_path", "decode_codewords",
    "decode_format_info", "decode_matrix", "deinterleave", "encode",
    "extract_wire", "format_info", "from_pbm", "from_wire",
    "function_template", "num_data_codewords", "parse_data_bytes",
    "penalty_score", "raw_codewords", "read_format", "size_for_version",
    "to_ascii", "to_pbm", "wire_index", "wire_order",
]
