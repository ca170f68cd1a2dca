"""End-to-end checks of the probe construction, training, and sampling."""
import json
import os
import warnings

import numpy as np
import pytest

import qprobe.boltzmann as boltzmann
import qprobe.kernel as kernel
import qprobe.prep as prep
import qprobe.probe as probe
import qprobe.qprobe as qprobe
import qprobe.qstate as qstate


pytestmark = pytest.mark.slow

ORACLE_WORKERS = min(8, os.cpu_count() or 1)


def test_bloch_grid_commutator_is_transverse_radius():
    vecGrid = np.linspace(-1.0, 1.0, 64)
    tensX, tensY, tensZ = np.meshgrid(vecGrid, vecGrid, vecGrid, indexing="ij")
    vecInside = (tensX**2 + tensY**2 + tensZ**2 <= 1.0).ravel()
    matR = np.stack([tensX.ravel(), tensY.ravel(), tensZ.ravel()], axis=1)[vecInside]
    # ...all states at once: rho = (I + r.sigma) / 2
    tensRho = 0.5 * (qstate.PAULI_I + np.einsum("nk,kij->nij", matR,
                                                 np.stack([qstate.PAULI_X, qstate.PAULI_Y, qstate.PAULI_Z])))
    tensComm = tensRho @ qstate.PAULI_Z - qstate.PAULI_Z @ tensRho
    vecNorms = np.linalg.norm(tensComm, ord=2, axis=(1, 2))
    np.testing.assert_allclose(vecNorms, np.hypot(matR[:, 0], matR[:, 1]), atol=1e-12, rtol=0)
    assert np.max(vecNorms) <= 1.0 + 1e-12

    # ...the library path on a spread of grid points
    for vecR in matR[::997]:
        rho = qstate.blochToDensity(vecR)
        assert qstate.commutatorAdvantage(rho, qstate.PAULI_Z) == pytest.approx(np.hypot(vecR[0], vecR[1]), abs=1e-12)
    for fAngle in np.linspace(0, 2 * np.pi, 64):
        rho = qstate.blochToDensity((np.cos(fAngle), np.sin(fAngle), 0.0))
        assert qstate.commutatorAdvantage(rho, qstate.PAULI_Z) == pytest.approx(1.0, abs=1e-12)


def test_oracle_confirms_construction():
    rng = np.random.default_rng(0)
    for iCase in range(50):
        iDim = 2 + iCase % 5
        matO = kernel.randomHermitian(iDim, rng)
        fAchieved = probe.optimalProbe(matO).achieved_norm
        _, fOracle = probe.oracleMaxPure(matO, 200, iSeed=iCase, iWorkers=ORACLE_WORKERS)
        assert fOracle <= fAchieved + 1e-6
        assert fOracle == pytest.approx(fAchieved, abs=1e-4)


def test_random_states_never_beat_construction():
    rng = np.random.default_rng(1)
    listStrict = []
    for iCase in range(20):
        iDim = 2 + iCase % 5
        matO = kernel.randomHermitian(iDim, rng)
        fAchieved = probe.optimalProbe(matO).achieved_norm
        for _ in range(200):
            rho = qstate.randomDensity(iDim, rng)
            fScore = qstate.commutatorAdvantage(rho, matO)
            assert fScore <= fAchieved + 1e-8
            if (qstate.purity(rho) < 0.99 and fScore >= fAchieved - 1e-6):
                listStrict.append((iCase, qstate.purity(rho), fAchieved - fScore))
    # Mixed states reaching the pure optimum are reported, not failed on
    if listStrict:
        warnings.warn("Mixed states within 1e-6 of the pure optimum: %s" % listStrict[:10])


def test_commuting_states_reduce_to_classical():
    rng = np.random.default_rng(2)
    for _ in range(100):
        iDim = int(rng.integers(2, 9))
        vecP = rng.dirichlet(np.ones(iDim))
        vecQ = rng.dirichlet(np.ones(iDim))
        vecO = rng.standard_normal(iDim)
        fS = qstate.quantumRelativeEntropy(np.diag(vecP), np.diag(vecQ))
        assert fS == pytest.approx(boltzmann.klDivergence(vecP, vecQ), abs=1e-10)
        fExpect = qstate.expectation(np.diag(vecP), np.diag(vecO))
        assert fExpect == pytest.approx(np.dot(vecP, vecO), abs=1e-12)


def test_training_recovers_generating_machine():
    rng = np.random.default_rng(0)
    listLayers = [[0, 1], [2]]
    source = boltzmann.randomMachine(listLayers, 1.0, rng)
    target = boltzmann.visibleDistribution(source)
    learner = boltzmann.randomMachine(listLayers, 1.0, rng, fScale=0.1)
    _, listTrace = boltzmann.trainExact(learner, target, 0.1, 5000)
    assert all(fNext <= fPrev for fPrev, fNext in zip(listTrace, listTrace[1:]))
    assert listTrace[-1] < 1e-3


def _klAt(machine, distBase, listSteps):
    # Parameters ordered as pairs i<j then biases...
    vecI, vecJ = np.triu_indices(machine.iSpins, 1)
    matW = np.array(machine.matWeights)
    vecB = np.array(machine.vecBiases)
    for (iParam, fStep) in listSteps:
        if (iParam < vecI.size):
            matW[vecI[iParam], vecJ[iParam]] += fStep
            matW[vecJ[iParam], vecI[iParam]] += fStep
        else:
            vecB[iParam - vecI.size] += fStep
    return boltzmann.klDivergence(distBase, boltzmann.boltzmannDistribution(machine.withParameters(matW, vecB)))


def test_fisher_metric_is_kl_hessian():
    rng = np.random.default_rng(3)
    fStep = 1e-3
    for _ in range(10):
        machine = boltzmann.randomMachine([[0, 1, 2]], float(rng.uniform(0.5, 1.5)), rng, fScale=0.5)
        distBase = boltzmann.boltzmannDistribution(machine)
        matF = boltzmann.fisherMetric(machine)
        iParams = matF.shape[0]
        matHessian = np.zeros((iParams, iParams))
        for a in range(iParams):
            for b in range(iParams):
                matHessian[a, b] = (_klAt(machine, distBase, [(a, fStep), (b, fStep)])
                                    - _klAt(machine, distBase, [(a, fStep), (b, -fStep)])
                                    - _klAt(machine, distBase, [(a, -fStep), (b, fStep)])
                                    + _klAt(machine, distBase, [(a, -fStep), (b, -fStep)])) / (4 * fStep**2)
        np.testing.assert_allclose(matF, matHessian, atol=1e-4)


def test_qfi_of_pure_states():
    rng = np.random.default_rng(4)
    for _ in range(100):
        iDim = int(rng.integers(2, 7))
        matO = kernel.randomHermitian(iDim, rng)
        rho = qstate.pureDensity(qstate.randomPureState(iDim, rng))
        fVar = qstate.expectation(rho, matO @ matO) - qstate.expectation(rho, matO)**2
        assert probe.qfiUnitaryEncoding(rho, matO).qfi == pytest.approx(4 * fVar, abs=1e-10)
    sense = probe.qfiUnitaryEncoding(probe.optimalProbe(qstate.PAULI_Z).rho_star, qstate.PAULI_Z)
    assert sense.qfi == pytest.approx(4.0, abs=1e-12)
    assert sense.cramer_rao == pytest.approx(0.25, abs=1e-12)


def test_preparation_circuits_for_diagonal_observables():
    rng = np.random.default_rng(5)
    for iDim in range(2, 257):
        construction = probe.optimalProbe(np.diag(rng.standard_normal(iDim)), rng.uniform(0, 2 * np.pi))
        seq = prep.prepCircuit(construction)
        assert len(seq.gates) <= 2 * seq.m + 2
        assert prep.verifyPrep(seq, construction) < 1e-10


def test_schmidt_decomposition_of_random_states():
    rng = np.random.default_rng(6)
    for iCase in range(100):
        iDimV = (2, 4)[iCase % 2]
        iDimH = int(rng.integers(2, 17))
        vecPsi = qstate.randomPureState(iDimV * iDimH, rng)
        schmidt = qstate.schmidtDecompose(vecPsi, (iDimV, iDimH))
        assert schmidt.rank <= min(iDimV, iDimH)
        assert np.max(np.abs(schmidt.reconstruct() - vecPsi)) < 1e-10


def test_anneal_command_matches_exact_distribution(tmp_path):
    dictMachine = {"n_spins": 4, "beta": 1.0, "layers": [[0, 1, 2, 3]],
                   "weights": [[0, 1, 0.4], [1, 2, -0.3], [2, 3, 0.5], [0, 3, 0.2]],
                   "biases": [0.1, -0.2, 0.0, 0.3]}
    strMachine = str(tmp_path / "machine.json")
    with open(strMachine, "w") as fileOut:
        json.dump(dictMachine, fileOut)
    strOut = str(tmp_path / "report.json")
    iCode = qprobe.main(["anneal", strMachine, "--schedule", "0.2:100,0.5:100,1.0:1000",
                         "--samples", "100000", "--out", strOut, "-q"])
    assert iCode == 0
    with open(strOut) as fileIn:
        dictDoc = json.load(fileIn)
    assert dictDoc["payload"]["tv"] <= 0.02
