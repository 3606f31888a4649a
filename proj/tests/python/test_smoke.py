"""Smoke tests for the python bindings."""

import os
import random

import pytest

import tristego as ts


def make_cover(width=16, height=16, colorspace=None, frames=3, seed=0):
    colorspace = colorspace or ts.Colorspace.C420
    rng = random.Random(seed)
    meta = ts.VideoMeta(width, height, colorspace)
    per_frame = meta.bytes_per_frame()
    return ts.VideoSequence(
        meta,
        [ts.Frame(bytes(rng.randrange(256) for _ in range(per_frame)))
         for _ in range(frames)],
    )


def test_roundtrip_and_capacity():
    cover = make_cover()
    assert ts.capacity(cover) == 130
    assert ts.lsb_slots_used(130) == 1152

    message = bytes(range(130))
    stego = ts.embed(cover, message, "smoke key")
    assert ts.extract(stego, "smoke key") == message

    report = ts.lsb_diff_census(cover, stego)
    assert report.global_psnr >= 48.13
    assert report.non_lsb_changes == 0
    assert report.changed_samples <= 1152


def test_wrong_key_and_pristine_raise():
    cover = make_cover(seed=3)
    stego = ts.embed(cover, b"secret", "right")
    with pytest.raises(ts.BadKeyOrNoPayload):
        ts.extract(stego, "wrong")
    with pytest.raises(ts.BadKeyOrNoPayload):
        ts.extract(cover, "right")
    with pytest.raises(ts.Error):
        ts.embed(cover, b"", "")  # empty passphrase


def test_capacity_error():
    cover = make_cover(seed=4)
    with pytest.raises(ts.CapacityError):
        ts.embed(cover, bytes(131), "key")


def test_y4m_file_roundtrip(tmp_path):
    cover = make_cover(seed=5)
    stego = ts.embed(cover, b"file payload", "io key")
    cover_path = os.fspath(tmp_path / "cover.y4m")
    stego_path = os.fspath(tmp_path / "stego.y4m")
    ts.write_y4m(cover, cover_path)
    ts.write_y4m(stego, stego_path)
    assert os.path.getsize(cover_path) == os.path.getsize(stego_path)

    back = ts.read_y4m(stego_path)
    assert ts.extract(back, "io key") == b"file payload"

    with pytest.raises(ts.ParseError):
        bad = tmp_path / "bad.y4m"
        bad.write_bytes(b"JUNK")
        ts.read_y4m(os.fspath(bad))


def test_ppm_dir_roundtrip(tmp_path):
    cover = make_cover(width=8, height=8,
                       colorspace=ts.Colorspace.RGB24, frames=2, seed=6)
    stego = ts.embed(cover, b"rgb payload", "ppm key")
    out = os.fspath(tmp_path / "frames")
    assert ts.write_ppm_dir(stego, out) == 2
    assert ts.extract(ts.read_ppm_dir(out), "ppm key") == b"rgb payload"


def test_primitive_vectors():
    assert ts.fnv1a64(b"") == 0xCBF29CE484222325
    assert ts.fnv1a64(b"a") == 0xAF63DC4C8601EC8C
    assert ts.keystream_bytes(0, 8) == bytes.fromhex("e220a8397b1dcdaf")
    assert ts.edge_bits(0, 2) == [1, 0]
    assert ts.frame_permutation(0, 2) == [0, 1]
    assert sorted(ts.frame_permutation(99, 10)) == list(range(10))
    assert ts.encrypt_bytes(b"\xb2", [0]) == b"\xde"
    assert ts.encrypt_bytes(b"\xb2", [1]) == b"\x5e"
    assert ts.decrypt_bytes(b"\xde", [0]) == b"\xb2"
    assert ts.crc32(b"123456789") == 0xCBF43926
    assert ts.encode_header(b"123456789")[-4:] == bytes.fromhex("cbf43926")

    data = bytes(range(64))
    assert ts.mask(ts.mask(data, 7, 3), 7, 3) == data

    schedule = ts.derive_schedule("k")
    assert schedule.seed_mask == ts.fnv1a64(b"k\x01")
    assert schedule.seed_perm == ts.fnv1a64(b"k\x02")
    assert schedule.seed_edge == ts.fnv1a64(b"k\x03")


def test_determinism():
    cover = make_cover(seed=8)
    a = ts.embed(cover, b"same", "same")
    b = ts.embed(cover, b"same", "same")
    assert all(x.samples == y.samples for x, y in zip(a.frames, b.frames))


def test_quality_report_serialization():
    cover = make_cover(seed=9)
    report = ts.lsb_diff_census(cover, cover)
    assert "global_psnr=inf" in report.to_text()
    assert '"global_psnr":"inf"' in report.to_json().replace(" ", "")
