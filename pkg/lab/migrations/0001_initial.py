# Generated by Django 5.1.6 on 2026-10-19 10:00

import django.db.models.deletion
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='SuiteRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('created_at', models.DateTimeField(auto_now_add=True, verbose_name='Дата запуска')),
                ('version', models.CharField(max_length=31, verbose_name='Версия')),
                ('quick', models.BooleanField(default=False, verbose_name='Быстрый масштаб')),
                ('status', models.CharField(choices=[('passed', 'Пройден'), ('failed', 'Провален'), ('unknown', 'Неизвестно')], default='unknown', max_length=15, verbose_name='Статус')),
                ('report', models.TextField(verbose_name='JSON-отчёт')),
            ],
            options={
                'verbose_name': 'Прогон набора',
                'verbose_name_plural': 'Прогоны набора',
                'ordering': ['-created_at'],
            },
        ),
        migrations.CreateModel(
            name='CriterionOutcome',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('number', models.PositiveSmallIntegerField(verbose_name='Номер критерия')),
                ('name', models.CharField(max_length=63, verbose_name='Критерий')),
                ('status', models.CharField(choices=[('passed', 'Пройден'), ('failed', 'Провален'), ('unknown', 'Неизвестно')], max_length=15, verbose_name='Статус')),
                ('checked', models.PositiveIntegerField(default=0, verbose_name='Проверено случаев')),
                ('failures', models.PositiveIntegerField(default=0, verbose_name='Нарушений')),
                ('unknown', models.PositiveIntegerField(default=0, verbose_name='Без ответа')),
                ('run', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='outcomes', to='lab.suiterun', verbose_name='Прогон')),
            ],
            options={
                'verbose_name': 'Исход критерия',
                'verbose_name_plural': 'Исходы критериев',
                'ordering': ['run', 'number'],
            },
        ),
    ]
