"""Multilayer perceptron with exact reverse-mode gradients"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from core.domain.base_entity import BaseEntity
from core.domain.enums import ActivationEnum
from core.exceptions import DimensionMismatchException
from shared.validation import NumericValidators
from ..exceptions.nn_exceptions import BackwardBeforeForwardException, InvalidParametersException
from ..services.activations import activate, derivative, second_derivative


@dataclass
class DenseLayer:
    """Affine layer; weight is [out x in]"""
    weight: np.ndarray
    bias: np.ndarray

    @property
    def in_dim(self) -> int:
        return int(self.weight.shape[1])

    @property
    def out_dim(self) -> int:
        return int(self.weight.shape[0])


class MlpParams:
    """
    Ordered dense layers plus the activation applied after each one.
    Hidden layers default to ELU, the output layer to identity.
    """

    def __init__(
        self,
        layers: Sequence[DenseLayer],
        hidden_activations: Union[ActivationEnum, Sequence[ActivationEnum]] = ActivationEnum.Elu,
        output_activation: ActivationEnum = ActivationEnum.Identity,
    ):
        if not layers:
            raise InvalidParametersException("at least one layer is required")
        for index, layer in enumerate(layers):
            if layer.weight.ndim != 2 or layer.bias.shape != (layer.out_dim,):
                raise InvalidParametersException(
                    "weight must be [out x in] and bias [out]",
                    layer=index, weight=layer.weight.shape, bias=layer.bias.shape,
                )
            if index > 0 and layers[index - 1].out_dim != layer.in_dim:
                raise InvalidParametersException(
                    "consecutive layer sizes do not chain",
                    layer=index, previous_out=layers[index - 1].out_dim, in_dim=layer.in_dim,
                )
            if not (np.all(np.isfinite(layer.weight)) and np.all(np.isfinite(layer.bias))):
                raise InvalidParametersException("parameters must be finite", layer=index)
        hidden_count = len(layers) - 1
        if isinstance(hidden_activations, ActivationEnum):
            hidden_activations = [hidden_activations] * hidden_count
        if len(hidden_activations) != hidden_count:
            raise InvalidParametersException(
                "one activation tag per hidden layer",
                expected=hidden_count, actual=len(hidden_activations),
            )
        self.layers: List[DenseLayer] = list(layers)
        self.activations: List[ActivationEnum] = [*hidden_activations, output_activation]

    @property
    def in_dim(self) -> int:
        return self.layers[0].in_dim

    @property
    def out_dim(self) -> int:
        return self.layers[-1].out_dim

    @property
    def sizes(self) -> List[int]:
        return [self.in_dim, *[layer.out_dim for layer in self.layers]]

    def arrays(self) -> List[np.ndarray]:
        """Live parameter arrays in optimizer order: W0, b0, W1, b1, ..."""
        out: List[np.ndarray] = []
        for layer in self.layers:
            out.extend((layer.weight, layer.bias))
        return out

    def named_arrays(self, prefix: str) -> Dict[str, np.ndarray]:
        named = {}
        for index, layer in enumerate(self.layers):
            named[f"{prefix}.{index}.weight"] = layer.weight
            named[f"{prefix}.{index}.bias"] = layer.bias
        return named

    @classmethod
    def from_named_arrays(
        cls,
        prefix: str,
        arrays: Dict[str, np.ndarray],
        hidden_activations: Union[ActivationEnum, Sequence[ActivationEnum]] = ActivationEnum.Elu,
        output_activation: ActivationEnum = ActivationEnum.Identity,
    ) -> "MlpParams":
        """Rebuild from a flat name -> array mapping written by named_arrays"""
        layers = []
        index = 0
        while f"{prefix}.{index}.weight" in arrays:
            layers.append(DenseLayer(
                weight=np.array(arrays[f"{prefix}.{index}.weight"], dtype=np.float64),
                bias=np.array(arrays[f"{prefix}.{index}.bias"], dtype=np.float64),
            ))
            index += 1
        return cls(layers, hidden_activations, output_activation)

    @classmethod
    def initialize(
        cls,
        sizes: Sequence[int],
        rng: np.random.Generator,
        hidden_gain: float = 1.0,
        output_gain: float = 1.0,
        hidden_activations: Union[ActivationEnum, Sequence[ActivationEnum]] = ActivationEnum.Elu,
        output_activation: ActivationEnum = ActivationEnum.Identity,
    ) -> "MlpParams":
        """
        Orthogonal weight init with zero biases.

        Args:
            sizes: [in, hidden..., out]
            rng: Generator consumed in layer order
            hidden_gain: Scale for all but the last layer
            output_gain: Scale for the last layer
        """
        if len(sizes) < 2:
            raise InvalidParametersException("sizes needs an input and an output", sizes=list(sizes))
        layers = []
        for index, (fan_in, fan_out) in enumerate(zip(sizes[:-1], sizes[1:])):
            gain = output_gain if index == len(sizes) - 2 else hidden_gain
            layers.append(DenseLayer(
                weight=gain * _orthogonal(fan_out, fan_in, rng),
                bias=np.zeros(fan_out),
            ))
        return cls(layers, hidden_activations, output_activation)

    def copy(self) -> "MlpParams":
        return MlpParams(
            [DenseLayer(layer.weight.copy(), layer.bias.copy()) for layer in self.layers],
            self.activations[:-1],
            self.activations[-1],
        )


def _orthogonal(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    flat = rng.standard_normal((max(rows, cols), min(rows, cols)))
    q, r = np.linalg.qr(flat)
    q = q * np.sign(np.diag(r))
    return q if rows >= cols else q.T


@dataclass
class MlpGradients:
    """Gradients aligned with MlpParams.arrays(); input is d/dx of the same objective"""
    weights: List[np.ndarray]
    biases: List[np.ndarray]
    input: Optional[np.ndarray] = field(default=None)

    def arrays(self) -> List[np.ndarray]:
        out: List[np.ndarray] = []
        for dw, db in zip(self.weights, self.biases):
            out.extend((dw, db))
        return out

    def scaled(self, factor: float) -> "MlpGradients":
        return MlpGradients(
            [w * factor for w in self.weights],
            [b * factor for b in self.biases],
            None if self.input is None else self.input * factor,
        )

    def __add__(self, other: "MlpGradients") -> "MlpGradients":
        return MlpGradients(
            [a + b for a, b in zip(self.weights, other.weights)],
            [a + b for a, b in zip(self.biases, other.biases)],
            None,
        )


class MultilayerPerceptron(BaseEntity):
    """
    Feed-forward network over a single vector or an [N x in] batch.

    forward() caches the layer inputs and pre-activations; backward() consumes
    that cache and may be called repeatedly until the next forward.
    Gradients for a batch are sums over the batch rows.
    """

    def __init__(self, params: MlpParams, name: str = "mlp"):
        super().__init__()
        self.params = params
        self.name = name
        self._inputs: Optional[List[np.ndarray]] = None
        self._preactivations: Optional[List[np.ndarray]] = None
        self._batched = False

    @property
    def in_dim(self) -> int:
        return self.params.in_dim

    @property
    def out_dim(self) -> int:
        return self.params.out_dim

    def forward(self, x) -> np.ndarray:
        """
        Args:
            x: [in] or [N x in]

        Returns:
            [out] or [N x out], matching the input rank
        """
        batch, self._batched = self._as_batch(x)
        h = batch
        inputs, preactivations = [], []
        for layer, kind in zip(self.params.layers, self.params.activations):
            inputs.append(h)
            z = h @ layer.weight.T + layer.bias
            preactivations.append(z)
            h = activate(kind, z)
        self._inputs, self._preactivations = inputs, preactivations
        return h if self._batched else h[0]

    def __call__(self, x) -> np.ndarray:
        return self.forward(x)

    def backward(self, upstream) -> MlpGradients:
        """
        Gradient of sum(output * upstream) w.r.t. parameters and input.

        Raises:
            BackwardBeforeForwardException: No forward pass is cached
            DimensionMismatchException: upstream does not match the cached output
        """
        if self._inputs is None:
            raise BackwardBeforeForwardException(self.name)
        grad = NumericValidators.as_float_array(upstream, "upstream")
        if not self._batched:
            grad = grad.reshape(1, -1) if grad.ndim == 1 else grad
        expected = self._preactivations[-1].shape
        if grad.shape != expected:
            raise DimensionMismatchException(f"{self.name} upstream gradient", expected, grad.shape)

        weights: List[np.ndarray] = [None] * len(self.params.layers)
        biases: List[np.ndarray] = [None] * len(self.params.layers)
        for k in reversed(range(len(self.params.layers))):
            dz = grad * derivative(self.params.activations[k], self._preactivations[k])
            weights[k] = dz.T @ self._inputs[k]
            biases[k] = dz.sum(axis=0)
            grad = dz @ self.params.layers[k].weight
        return MlpGradients(weights, biases, grad if self._batched else grad[0])

    def input_gradient_penalty(self, x) -> Tuple[np.ndarray, MlpGradients]:
        """
        Per-sample 0.5 * ||d out / d x||^2 for a scalar-output network, and the
        exact parameter gradient of the summed penalty (second-order terms included).

        Returns:
            (penalties [N], gradients of sum of penalties)
        """
        if self.out_dim != 1:
            raise DimensionMismatchException(f"{self.name} penalty output", 1, self.out_dim)
        self.forward(x)
        layers, acts = self.params.layers, self.params.activations
        zs, hs = self._preactivations, self._inputs
        depth = len(layers)
        seed = np.ones_like(zs[-1])

        # Input-gradient chain: delta_k = v_{k+1} * f'_k(z_k), v_k = delta_k W_k
        deltas: List[np.ndarray] = [None] * depth
        vs: List[np.ndarray] = [None] * (depth + 1)
        vs[depth] = seed
        for k in reversed(range(depth)):
            deltas[k] = vs[k + 1] * derivative(acts[k], zs[k])
            vs[k] = deltas[k] @ layers[k].weight
        input_grad = vs[0]
        penalties = 0.5 * np.sum(input_grad * input_grad, axis=1)

        weights = [np.zeros_like(layer.weight) for layer in layers]
        biases = [np.zeros_like(layer.bias) for layer in layers]

        # Reverse through the chain above, collecting extra z adjoints.
        z_extra: List[np.ndarray] = [None] * depth
        v_bar = input_grad
        for k in range(depth):
            weights[k] += deltas[k].T @ v_bar
            delta_bar = v_bar @ layers[k].weight.T
            z_extra[k] = delta_bar * vs[k + 1] * second_derivative(acts[k], zs[k])
            v_bar = delta_bar * derivative(acts[k], zs[k])

        # The penalty does not read the output, so only z_extra flows here.
        h_bar = np.zeros_like(zs[-1])
        for k in reversed(range(depth)):
            z_bar = z_extra[k] + h_bar * derivative(acts[k], zs[k])
            weights[k] += z_bar.T @ hs[k]
            biases[k] += z_bar.sum(axis=0)
            h_bar = z_bar @ layers[k].weight
        return penalties, MlpGradients(weights, biases, None)

    def _as_batch(self, x) -> Tuple[np.ndarray, bool]:
        array = NumericValidators.as_float_array(x, f"{self.name} input")
        if array.ndim not in (1, 2):
            raise DimensionMismatchException(f"{self.name} input rank", "1 or 2", array.ndim)
        NumericValidators.require_last_dim(array, self.in_dim, f"{self.name} input")
        return (array, True) if array.ndim == 2 else (array.reshape(1, -1), False)
