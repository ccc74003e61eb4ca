from cavity_memory import (
    excitation_ledger, InitialState, make_shape, ShapeKind, ShapeSpec,
    simulate, synthesize_control,
)
from cavity_memory.api.entities import default_params
from cavity_memory.api.entities.units import us_to_s

params = default_params(rho0=0.005)
photon = make_shape(ShapeSpec(ShapeKind.SIN2, tau_photon=us_to_s(3.14)))

pulse = synthesize_control(photon, params)
init = InitialState.seeded(params.rho0)
trajectory = simulate(photon, pulse, params, init)
report = excitation_ledger(trajectory, photon, params, init)
print(report.reflection, report.storage_efficiency)
