import numpy as np
from scipy.spatial.distance import cdist


class Distance:
    """Pairwise distances computed from coordinate differences. Unlike the quadratic
    expansion |x|^2 - 2 x.y + |y|^2 this never goes negative and swapping the
    arguments gives the exact transpose, so Gram matrices of a set with itself are symmetric."""

    @staticmethod
    def squared_euclidean_distance(x1: np.ndarray, x2: np.ndarray) -> np.ndarray:
        """Calculates squared distance matrix between data points

        Args:
            :param: `x1` np.ndarray of shape n x ndimensions:
                First matrix of n points
            :param: `x2` np.ndarray of shape m x ndimensions:
                Second marix of m points, can be identical to the first matrix `x1`

        Returns:
            :type: `np.ndarray`
                The squared distance matrix of shape (`x1.shape[0]`, `x2.shape[0]`)
        """
        return cdist(np.atleast_2d(x1), np.atleast_2d(x2), "sqeuclidean")

    @staticmethod
    def euclidean_distance(x1: np.ndarray, x2: np.ndarray) -> np.ndarray:
        """Calculates the Euclidean distance matrix of shape (n, m) between data points"""
        return cdist(np.atleast_2d(x1), np.atleast_2d(x2), "euclidean")
