import pytest

from dynreg.algebra import (
    FACTOR_COM,
    FACTOR_NIL1,
    check_variety,
    find_zg_certificate,
    subdirect_certificate,
)
from dynreg.errors import NotZg
from dynreg.gallery import cyclic, gallery, s3, zg_monoid5


def test_one_factor_nilpotent():
    cert = find_zg_certificate(zg_monoid5())
    assert cert.kinds == [FACTOR_NIL1]
    assert cert.validate()


def test_one_factor_commutative():
    cert = find_zg_certificate(cyclic(6))
    assert cert.kinds == [FACTOR_COM]
    assert cert.validate()


def test_two_factor_subdirect(gal):
    m = gal["Z2xzg5"]
    cert = find_zg_certificate(m)
    assert cert is not None and len(cert.factors) >= 2
    assert sorted(cert.kinds) == [FACTOR_COM, FACTOR_NIL1]
    assert cert.validate()


def test_subdirect_search_separates_commutative_product(gal):
    # the commutative product would normally take the one-factor shortcut;
    # the raw search still finds a separating pair of quotients
    m = gal["U1xZ3"]
    cert = subdirect_certificate(m)
    assert cert is not None and len(cert.factors) >= 2
    assert cert.validate()


def test_not_zg_raises():
    with pytest.raises(NotZg):
        find_zg_certificate(s3())


def test_certificates_sound_for_all_zg_gallery(gal):
    for name, s in gal.items():
        if s.identity is None or not check_variety(s, "ZG"):
            continue
        cert = find_zg_certificate(s)
        assert cert is not None, name
        assert cert.validate(), name
        for f, kind in zip(cert.factors, cert.kinds):
            if kind == FACTOR_COM:
                assert check_variety(f, "COM"), name
            else:
                assert check_variety(f, "NIL_PLUS_ONE"), name
