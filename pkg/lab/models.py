from django.db import models


class Status(models.TextChoices):
    PASSED = 'passed', 'Пройден'
    FAILED = 'failed', 'Провален'
    UNKNOWN = 'unknown', 'Неизвестно'


class SuiteRun(models.Model):
    """Прогон набора приёмочных критериев"""
    created_at = models.DateTimeField(auto_now_add=True, verbose_name='Дата запуска')
    version = models.CharField(max_length=31, verbose_name='Версия')
    quick = models.BooleanField(default=False, verbose_name='Быстрый масштаб')
    status = models.CharField(max_length=15, choices=Status.choices, default=Status.UNKNOWN, verbose_name='Статус')
    report = models.TextField(verbose_name='JSON-отчёт')

    def __str__(self):
        return f'Прогон {self.pk}: {self.get_status_display()}'

    class Meta:
        verbose_name = 'Прогон набора'
        verbose_name_plural = 'Прогоны набора'
        ordering = ['-created_at']


class CriterionOutcome(models.Model):
    run = models.ForeignKey(SuiteRun, on_delete=models.CASCADE, related_name='outcomes', verbose_name='Прогон')
    number = models.PositiveSmallIntegerField(verbose_name='Номер критерия')
    name = models.CharField(max_length=63, verbose_name='Критерий')
    status = models.CharField(max_length=15, choices=Status.choices, verbose_name='Статус')
    checked = models.PositiveIntegerField(default=0, verbose_name='Проверено случаев')
    failures = models.PositiveIntegerField(default=0, verbose_name='Нарушений')
    unknown = models.PositiveIntegerField(default=0, verbose_name='Без ответа')

    def __str__(self):
        return f'{self.number}. {self.name}: {self.status}'

    class Meta:
        verbose_name = 'Исход критерия'
        verbose_name_plural = 'Исходы критериев'
        ordering = ['run', 'number']
