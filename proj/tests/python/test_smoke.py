import numpy as np
import pytest

import symext

I = 1j


def test_worked_example_defects():
    a = symext.worked_example()
    assert a.ambient_dim == 2 and a.domain_dim == 1
    assert symext.defect_numbers(a, I) == (1, 1)


def test_operator_roundtrip_json():
    a = symext.gen_symmetric(dim=4, defect=2, seed=3)
    b = symext.Operator.from_json(a.to_json())
    assert np.allclose(a.full_matrix(), b.full_matrix(), atol=1e-14)


def test_extend_and_recover():
    a = symext.gen_symmetric(dim=5, defect=2, seed=11)
    z = 0.3 + 1.1j
    rng = np.random.default_rng(0)
    q, _ = np.linalg.qr(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
    report = symext.extend(a, z, q)
    assert report["classification"] == "self-adjoint"
    back = symext.recover_parameter(a, report["b"], z)
    assert np.allclose(back["coefficients"], q, atol=1e-9)


def test_worked_family_invertibility():
    a = symext.worked_example()
    assert not symext.check_invertibility(a, I, np.array([[-1.0]]))["direct"]
    v = symext.check_invertibility(a, I, np.array([[np.exp(0.5j)]]))
    assert v["direct"] and v["agree"]


def test_chain_and_resolvents():
    a = symext.gen_symmetric(dim=3, defect=1, seed=5)
    chain = symext.build_invertible_selfadjoint(a, I, seed=2, double=True)
    atilde = chain["final"]
    assert np.allclose(atilde, atilde.conj().T, atol=1e-10)
    assert np.min(np.abs(np.linalg.eigvalsh(atilde))) > 1e-8
    for lam in symext.default_grid(I, atilde)[:6]:
        r1 = symext.compressed_resolvent(a, atilde, lam)
        r2 = symext.shtraus_resolvent(a, atilde, I, lam)
        assert np.linalg.norm(r1 - r2, 2) < 1e-8
    report = symext.verify(a, atilde, I)
    assert report["all_passed"], report["checks"]


def test_i_admissibility_rejects_singular_parameter():
    v = symext.i_admissibility(symext.worked_example(), I, np.array([[-1.0]]))
    assert not v["admissible"]
    assert np.allclose(np.abs(v["witness"]), [0.0, 1.0], atol=1e-10)


def test_errors_are_typed():
    with pytest.raises(symext.SpecInfeasible):
        symext.gen_symmetric(dim=2, defect=3)
    with pytest.raises(symext.RealPoint):
        symext.defect_numbers(symext.worked_example(), 1.0)
