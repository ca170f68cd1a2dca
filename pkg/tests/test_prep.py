"""Tests for probe preparation circuits."""
import numpy as np
import pytest

import qprobe.error as qerror
import qprobe.kernel as kernel
import qprobe.prep as prep
import qprobe.probe as probe
import qprobe.qstate as qstate


@pytest.mark.parametrize("iDim,iQubits", [(2, 1), (3, 2), (4, 2), (5, 3), (8, 3), (9, 4), (256, 8)])
def test_qubit_count(iDim, iQubits):
    assert prep.qubitCount(iDim) == iQubits


def test_sigma_z_circuit():
    construction = probe.optimalProbe(np.diag([1.0, -1.0]))
    seq = prep.prepCircuit(construction)
    assert seq.m == 1
    assert seq.gates == (prep.TwoLevelRY(0, 1, np.pi / 2), )
    np.testing.assert_allclose(prep.simulateGates(seq), [1 / np.sqrt(2), 1 / np.sqrt(2)], atol=1e-15)
    assert prep.verifyPrep(seq, construction) < 1e-15


def test_circuit_relabels_probe_levels():
    # ...largest a at position 5, largest b at position 2
    construction = probe.optimalProbe(np.diag([0.1, 0.0, -3.0, 0.2, -0.1, 2.8]), 0.7)
    assert (construction.i_star, construction.j_star) == (5, 2)
    seq = prep.prepCircuit(construction)
    assert seq.m == 3
    assert seq.permutation[5] == 4
    assert seq.permutation[2] == 5
    assert [gate.kind for gate in seq.gates] == ["FlipX", "TwoLevelRY", "Phase"]
    assert seq.gates[0] == prep.FlipX(2)
    assert prep.verifyPrep(seq, construction) < 1e-12


def test_random_observables_prepare_within_gate_budget(rng):
    for iDim in (2, 3, 6, 7, 16, 33):
        construction = probe.optimalProbe(kernel.randomHermitian(iDim, rng), rng.uniform(0, 2 * np.pi))
        seq = prep.prepCircuit(construction)
        assert len(seq.gates) <= 2 * seq.m + 2
        assert all(0 <= i < 2**seq.m for gate in seq.gates for i in gate.targets)
        assert prep.verifyPrep(seq, construction) < 1e-10


def test_simulate_rejects_out_of_range_targets():
    with pytest.raises(qerror.IndexOutOfRange):
        prep.simulateGates(prep.GateSequence(1, (prep.FlipX(1), ), (0, 1)))
    with pytest.raises(qerror.IndexOutOfRange):
        prep.simulateGates(prep.GateSequence(2, (prep.TwoLevelRY(0, 4, 1.0), ), (0, 1, 2, 3)))


def test_padding_leak_is_reported():
    # ...level 3 is padding for a 3-level target
    seq = prep.GateSequence(2, (prep.FlipX(0), prep.FlipX(1)), (0, 1, 2, 3))
    with pytest.raises(qerror.PaddingLeak):
        prep.verifyPrep(seq, [1.0, 0.0, 0.0])


def test_gate_sequence_needs_full_permutation():
    with pytest.raises(qerror.ValidationError):
        prep.GateSequence(2, (), (0, 1, 2))


def test_make_gate():
    assert prep.makeGate("Phase", [3], 0.5) == prep.Phase(3, 0.5)
    with pytest.raises(qerror.ParseError):
        prep.makeGate("CNOT", [0, 1])
    with pytest.raises(qerror.ParseError):
        prep.makeGate("TwoLevelRY", [0], 1.0)


def test_verify_against_density_targets():
    seq = prep.prepCircuit(probe.optimalProbe(qstate.PAULI_Z))
    rhoPlus = qstate.DensityMatrix(0.5 * (qstate.PAULI_I + qstate.PAULI_X))
    assert prep.verifyPrep(seq, rhoPlus) < 1e-10
    seqEmpty = prep.GateSequence(1, (), (0, 1))
    assert prep.verifyPrep(seqEmpty, qstate.DensityMatrix(np.diag([1.0, 0.0]))) == 0.0
    assert prep.verifyPrep(seqEmpty, rhoPlus) == pytest.approx(0.5)


def test_verify_ignores_global_phase():
    construction = probe.optimalProbe(np.diag([0.5, -1.0, 2.0]), 1.1)
    seq = prep.prepCircuit(construction)
    assert prep.verifyPrep(seq, -construction.psi_eigen) < 1e-12
    assert prep.verifyPrep(seq, 1j * construction.psi_eigen) < 1e-12


def test_verify_rejects_oversized_target():
    with pytest.raises(qerror.DimMismatch):
        prep.verifyPrep(prep.GateSequence(1, (), (0, 1)), np.eye(3) / 3)


def test_simulate_basic_circuits():
    np.testing.assert_array_equal(prep.simulateGates(prep.GateSequence(2, (), (0, 1, 2, 3))), [1, 0, 0, 0])
    vecRY = prep.simulateGates(prep.GateSequence(1, (prep.TwoLevelRY(0, 1, np.pi / 2), ), (0, 1)))
    np.testing.assert_allclose(vecRY, [1 / np.sqrt(2), 1 / np.sqrt(2)], atol=1e-15)
    np.testing.assert_array_equal(prep.simulateGates(prep.GateSequence(1, (prep.FlipX(0), ), (0, 1))), [0, 1])


def test_simulate_preserves_norm(rng):
    for _ in range(50):
        iQubits = int(rng.integers(1, 5))
        iLevels = 2**iQubits
        listGates = []
        for _ in range(int(rng.integers(1, 20))):
            iKind = int(rng.integers(0, 3))
            if (iKind == 0):
                listGates.append(prep.FlipX(int(rng.integers(0, iQubits))))
            elif (iKind == 1):
                iA, iB = rng.choice(iLevels, size=2, replace=False)
                listGates.append(prep.TwoLevelRY(int(iA), int(iB), float(rng.uniform(0, 4 * np.pi))))
            else:
                listGates.append(prep.Phase(int(rng.integers(0, iLevels)), float(rng.uniform(0, 2 * np.pi))))
        seq = prep.GateSequence(iQubits, tuple(listGates), tuple(range(iLevels)))
        assert np.linalg.norm(prep.simulateGates(seq)) == pytest.approx(1.0, abs=1e-12)
