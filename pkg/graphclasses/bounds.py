"""Замкнутые оценки, используемые проверками классов и извлекателями"""


class BoundTable:
    """Именованные оценки; только арифметика"""

    @staticmethod
    def phi_theta_free_t(r, s):
        """t = 2qr, q = max(r, s) - 1: члены Φ(L_{r,s}, P_r) не содержат θ_{t,t,t}"""
        q = max(r, s) - 1
        return 2 * q * r

    @staticmethod
    def heavy_cycle_path(t):
        """Путь веса больше (t - 2)^2 в 2-связном графе даёт цикл веса >= t"""
        return (t - 2) ** 2

    @staticmethod
    def small_theta_length(t):
        """Порог l(G) >= 4t^2 для малых тета (цикл, внешнепланарный граф)"""
        return 4 * t * t

    @staticmethod
    def cycle_sum_class(t):
        """Индекс класса C(L_{8t^2})"""
        return 8 * t * t

    @staticmethod
    def pr3_cycle(r):
        """Длина внешнего цикла в P_r^3: |C| >= 3r"""
        return 3 * r

    @staticmethod
    def pr_cpath(r):
        """Вес C-пути в P_r меньше 2r"""
        return 2 * r

    @classmethod
    def as_dict(cls, t=None, r=None, s=None):
        data = {}
        if t is not None:
            data.update({
                'heavy_cycle_path': cls.heavy_cycle_path(t),
                'small_theta_length': cls.small_theta_length(t),
                'cycle_sum_class': cls.cycle_sum_class(t),
            })
        if r is not None:
            data.update({'pr3_cycle': cls.pr3_cycle(r), 'pr_cpath': cls.pr_cpath(r)})
            if s is not None:
                data['phi_theta_free_t'] = cls.phi_theta_free_t(r, s)
        return data
