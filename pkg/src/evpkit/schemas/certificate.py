from typing import Annotated, List

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt

from evpkit.core.exceptions import DimensionMismatch
from evpkit.geometry import Scalarizer
from evpkit.numeric import RationalVector
from evpkit.principle import ChainStep, EkelandCertificate, RelationWitness
from evpkit.schemas.custom_validators import RationalStr
from evpkit.space import Instance


class RelationWitnessFile(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    lam: Annotated[List[RationalStr], Field(alias="lambda")]
    mu: List[RationalStr]
    delta: List[RationalStr]
    k: List[RationalStr]

    @classmethod
    def from_witness(cls, witness: RelationWitness) -> "RelationWitnessFile":
        return cls(
            lam=list(witness.lam),
            mu=list(witness.mu),
            delta=list(witness.delta),
            k=list(witness.k),
        )

    def to_witness(self, inst: Instance) -> RelationWitness:
        if len(self.lam) != len(inst.dset) or len(self.mu) != len(inst.cone.generators):
            raise DimensionMismatch(
                f"witness weights have shape ({len(self.lam)}, {len(self.mu)}), "
                f"instance needs ({len(inst.dset)}, {len(inst.cone.generators)})"
            )
        if len(self.delta) != inst.dim or len(self.k) != inst.dim:
            raise DimensionMismatch(f"witness vectors must have dimension {inst.dim}")
        return RelationWitness(
            lam=tuple(self.lam),
            mu=tuple(self.mu),
            delta=RationalVector.parse(self.delta),
            k=RationalVector.parse(self.k),
        )


class ChainStepFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    point: NonNegativeInt
    witness: RelationWitnessFile


class CertificateFile(BaseModel):
    """Wire form of an Ekeland certificate; chain steps are the points after `start`."""

    model_config = ConfigDict(extra="forbid")

    start: NonNegativeInt
    chain: List[ChainStepFile]
    x_bar: NonNegativeInt
    y_star: List[RationalStr]
    scalar_trace: List[RationalStr]
    scale: RationalStr
    inclusion_witness: RelationWitnessFile

    @classmethod
    def from_certificate(cls, cert: EkelandCertificate) -> "CertificateFile":
        return cls(
            start=cert.start,
            chain=[
                ChainStepFile(point=step.point, witness=RelationWitnessFile.from_witness(step.witness))
                for step in cert.chain
            ],
            x_bar=cert.x_bar,
            y_star=list(cert.scalarizer.y_star),
            scalar_trace=list(cert.scalar_trace),
            scale=cert.scale,
            inclusion_witness=RelationWitnessFile.from_witness(cert.inclusion_witness),
        )

    def to_certificate(self, inst: Instance) -> EkelandCertificate:
        if len(self.y_star) != inst.dim:
            raise DimensionMismatch(f"y_star has dimension {len(self.y_star)}, instance has {inst.dim}")
        return EkelandCertificate(
            start=self.start,
            chain=tuple(ChainStep(step.point, step.witness.to_witness(inst)) for step in self.chain),
            x_bar=self.x_bar,
            scalarizer=Scalarizer(RationalVector.parse(self.y_star)),
            scalar_trace=tuple(self.scalar_trace),
            scale=self.scale,
            inclusion_witness=self.inclusion_witness.to_witness(inst),
        )
